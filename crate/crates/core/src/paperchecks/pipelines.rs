use std::time::Instant;

use crate::exactnum::{BigRat, DecisionPath};
use crate::holonomic::Sequence;
use crate::induction::{
    clf_bound, flf_bound, pointwise_bound_check, positive_on_integer_tail,
    scan_base, verify_ratio_bounds, BoundSpec, BoundVerification, InductionCertificate, Side,
    POINTWISE_SPAN,
};
use crate::logbehavior::{check_root_log_concave, check_root_monotone, PropertyReport, Verdict};
use crate::poly::RatFunc;
use crate::{Error, Result};

use super::bounds::{
    check_nfu, check_vu1, check_vu2, check_vuh, chain_implication, h_gt_16, sasvari_exponent_sign,
};
use super::clf::{
    claim_ln_decreasing, claim_rn_increasing, crossover, euler_seq_increasing, ln_rn,
    rn_product_identity,
};
use super::{Context, Outcome, SubResult, TheoremId, TheoremReport};

/// Display ids that the pipelines must jointly cover.
pub const ALL_DISPLAY_IDS: &[&str] = &[
    "1.1", "1.2", "1.3", "1.4", "2.1", "2.2", "2.3", "2.4", "2.5", "3.1", "3.2", "3.3", "3.4",
    "3.5", "3.6", "3.7", "3.8", "3.9", "3.10", "Prop4.1",
];

/// Base scan window for the lower `h(n)` bound.
const H_LOWER_SCAN: (u64, u64) = (4, 40);

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn require(n_hi: u64, min: u64) -> Result<()> {
    if n_hi < min {
        return Err(Error::InvalidRange {
            lo: min,
            hi: n_hi,
            reason: format!("pipeline needs n_hi >= {min}"),
        });
    }
    Ok(())
}

fn terms_sub(seq: &mut Sequence, display: &str, n_hi: u64) -> Result<SubResult> {
    seq.extend_to(n_hi)?;
    let mut s = SubResult::new(
        &format!("{}.terms", seq.name()),
        display,
        "recurrence yields positive integers",
        Outcome::Holds,
        "exact recurrence with divisibility assertion",
    )
    .with_range(0, n_hi);
    let terms = seq.terms(0, n_hi)?;
    if terms.iter().any(|t| *t <= 0u32) {
        s.outcome = Outcome::Fails;
    }
    for n in [4usize, 5] {
        if let Some(t) = terms.get(n) {
            s.witnesses.push(format!("a_{n}={t}"));
        }
    }
    Ok(s)
}

/// `A(n) - B(n)/v(n) = v(n+1)` on `[lo, hi]`.
fn ratio_map_fidelity(seq: &mut Sequence, lo: u64, hi: u64) -> Result<PropertyReport> {
    let map = seq.ratio_map();
    let mut report = PropertyReport::new("ratio_map_fidelity", seq.name().to_string(), lo, hi);
    for n in lo..=hi {
        let v = seq.ratio(n)?;
        let next = seq.ratio(n + 1)?;
        let ok = map.apply(n, &v).is_some_and(|w| w == next);
        report.push(n, if ok { Verdict::Holds } else { Verdict::Fails }, DecisionPath::Exact);
    }
    Ok(report)
}

fn certificate_witnesses(cert: &InductionCertificate) -> Vec<String> {
    let mut w = vec![
        format!("base n={}", cert.base.n),
        format!("ratio={}", cert.base.ratio()),
        format!("bound={}", cert.base.bound_value()),
        format!("step_numerator={}", cert.step_numerator),
        format!("conclusion={}", cert.conclusion),
    ];
    if let Some(s) = &cert.support {
        w.push(format!(
            "support: lower shift {} from n={}",
            s.lower.shift, s.lower.base.n
        ));
    }
    w
}

fn certificate_sub(check: &str, display: &str, claim: &str, v: &BoundVerification) -> SubResult {
    let outcome = match (v.certificate.is_certified(), v.pointwise.holds()) {
        (true, true) => Outcome::Certified,
        (false, true) => Outcome::NotCertified,
        (_, false) => Outcome::Fails,
    };
    let mut s = SubResult::new(check, display, claim, outcome, "induction certificate + pointwise sweep")
        .with_range(v.pointwise.n_lo, v.pointwise.n_hi);
    s.witnesses = certificate_witnesses(&v.certificate);
    if let Some(n) = v.pointwise.first_failure {
        s.witnesses.push(format!("pointwise failure n={n}"));
    }
    s
}

fn clf_lemma_subs(ctx: &mut Context) -> Result<Vec<SubResult>> {
    let specs = [
        BoundSpec::new(clf_bound(), Side::Lower, -1, 5),
        BoundSpec::new(clf_bound(), Side::Upper, 0, 5),
    ];
    let out = verify_ratio_bounds(&mut ctx.clf, &specs)?;
    Ok(vec![
        certificate_sub("clf.lower_bound", "2.3", "f(n-1) < P_n/P_{n-1} for n >= 5", &out[0]),
        certificate_sub("clf.upper_bound", "2.3", "P_n/P_{n-1} < f(n) for n >= 5", &out[1]),
    ])
}

fn flf_upper_sub(ctx: &mut Context) -> Result<SubResult> {
    let spec = BoundSpec::new(flf_bound(), Side::Upper, -1, 11);
    let out = verify_ratio_bounds(&mut ctx.flf, &[spec])?;
    Ok(certificate_sub(
        "flf.upper_bound",
        "3.3",
        "V_n/V_{n-1} < h(n-1) for n >= 11",
        &out[0],
    ))
}

fn flf_lower_sub(ctx: &mut Context) -> Result<SubResult> {
    let (lo, hi) = H_LOWER_SCAN;
    let scan = scan_base(&mut ctx.flf, &flf_bound(), Side::Lower, 0, lo, hi)?;
    let claim = "V_n/V_{n-1} > h(n) for n >= 4";
    match &scan.certificate {
        Some(cert) => {
            let spec = cert.spec()?;
            let pointwise = pointwise_bound_check(&mut ctx.flf, &spec, spec.base, spec.base + POINTWISE_SPAN)?;
            if !pointwise.holds() {
                return Err(Error::SoundnessViolation(format!(
                    "lower h(n) bound certified from n = {} fails at n = {}",
                    spec.base,
                    pointwise.first_failure.unwrap()
                )));
            }
            let v = BoundVerification {
                certificate: cert.clone(),
                pointwise,
            };
            Ok(certificate_sub("flf.lower_bound", "3.2", claim, &v)
                .with_note(format!("smallest certifying base in [{lo}, {hi}] is {}", spec.base)))
        }
        None => {
            let spec = BoundSpec::new(flf_bound(), Side::Lower, 0, lo);
            let pointwise = pointwise_bound_check(&mut ctx.flf, &spec, lo, lo + POINTWISE_SPAN)?;
            let outcome = if pointwise.holds() {
                Outcome::NotCertified
            } else {
                Outcome::Fails
            };
            Ok(SubResult::from_report("flf.lower_bound", "3.2", claim, &pointwise)
                .with_note(format!("no base in [{lo}, {hi}] closes the induction"))
                .with_witness(format!("attempts={:?}", scan.attempts)))
            .map(|mut s| {
                s.outcome = outcome;
                s
            })
        }
    }
}

fn positivity_sub(check: &str, display: &str, claim: &str, bound: &RatFunc, shift: i64, tail: i64) -> SubResult {
    let b = bound.shift(shift);
    let cert = positive_on_integer_tail(&(b.num() * b.den()), tail);
    let outcome = if cert.is_certified() {
        Outcome::Certified
    } else {
        Outcome::NotCertified
    };
    let mut s = SubResult::new(check, display, claim, outcome, "tail positivity of num*den");
    s.witnesses.push(format!("polynomial={}", cert.polynomial));
    s.witnesses.push(format!("tail_start={}", cert.tail_start));
    s
}

/// Strict log-concavity of `P_n^(1/n)` on `[2, n_hi]` with its supporting
/// certificates and claims.
pub fn theorem_1_1(ctx: &mut Context, n_hi: u64) -> Result<TheoremReport> {
    require(n_hi, 7)?;
    let start = Instant::now();
    let mut subs = vec![terms_sub(&mut ctx.clf, "1.1", n_hi + 1)?];

    let f = clf_bound();
    let mut fpos = positivity_sub("clf.f_positive", "2.1", "f(n-1) > 0 and finite for n >= 5", &f, -1, 5);
    fpos.witnesses.push(format!("f(4)={}", f.eval_i64(4).unwrap()));
    subs.push(fpos);

    let fid = ratio_map_fidelity(&mut ctx.clf, 1, n_hi)?;
    subs.push(SubResult::from_report(
        "clf.ratio_map",
        "2.2",
        "v(n+1) = A(n) - B(n)/v(n)",
        &fid,
    ));
    subs.extend(clf_lemma_subs(ctx)?);

    let base = check_root_log_concave(&mut ctx.clf, 2, 6, &ctx.options)?;
    subs.push(
        SubResult::from_report("clf.base_cases", "2.4", "cleared root inequality for 2 <= n <= 6", &base)
            .with_note("decided by direct power comparison"),
    );

    let (l7, r7) = ln_rn(&mut ctx.clf, 7)?;
    subs.push(
        SubResult::new("clf.l7_below_r7", "2.5", "l_7 < r_7", Outcome::from_bool(l7 < r7), "exact rational comparison")
            .with_witness(format!("l_7={l7}"))
            .with_witness(format!("r_7={r7}")),
    );
    let dec = claim_ln_decreasing(&mut ctx.clf, 5, n_hi)?;
    subs.push(SubResult::from_report("clf.l_decreasing", "2.5", "l_n strictly decreasing for n >= 5", &dec));
    let claims_hi = n_hi.min(ctx.horizons.claims).max(5);
    let inc = claim_rn_increasing(5, claims_hi)?;
    subs.push(SubResult::from_report("clf.r_increasing", "2.5", "r_n strictly increasing for n >= 5", &inc));
    let identity = (3..=claims_hi).try_fold(true, |ok, n| Ok::<_, Error>(ok && rn_product_identity(n)?))?;
    subs.push(
        SubResult::new("clf.r_product_form", "2.5", "r_n equals its product form", Outcome::from_bool(identity), "exact rational equality")
            .with_range(3, claims_hi),
    );
    let euler = euler_seq_increasing(2, n_hi)?;
    subs.push(SubResult::from_report("clf.euler_increasing", "2.5", "(1-1/n)^n strictly increasing", &euler));
    let cross = crossover(&mut ctx.clf, 5, n_hi)?;
    subs.push(
        SubResult::new("clf.crossover", "2.5", "smallest n >= 5 with l_n < r_n is 7", Outcome::from_bool(cross == Some(7)), "exact scan")
            .with_range(5, n_hi)
            .with_witness(format!("crossover={cross:?}")),
    );

    let sweep = check_root_log_concave(&mut ctx.clf, 2, n_hi, &ctx.options)?;
    subs.push(SubResult::from_report("clf.root_log_concave", "1.3", "(P_n^(1/n))^2 > P_{n-1}^(1/(n-1)) P_{n+1}^(1/(n+1))", &sweep));
    Ok(TheoremReport::new(TheoremId::Thm1_1, subs, elapsed_ms(start)))
}

pub fn lemma_2_1(ctx: &mut Context) -> Result<TheoremReport> {
    let start = Instant::now();
    let subs = clf_lemma_subs(ctx)?;
    Ok(TheoremReport::new(TheoremId::Lem2_1, subs, elapsed_ms(start)))
}

pub fn lemma_3_1(ctx: &mut Context) -> Result<TheoremReport> {
    let start = Instant::now();
    let subs = vec![flf_upper_sub(ctx)?];
    Ok(TheoremReport::new(TheoremId::Lem3_1, subs, elapsed_ms(start)))
}

fn vuh_subs(ctx: &mut Context) -> Result<Vec<SubResult>> {
    let hi = ctx.horizons.vuh;
    let vuh = check_vuh(&mut ctx.flf, 10, hi, &ctx.options.ladder)?;
    let vu2 = check_vu2(&mut ctx.flf, 10, hi, &ctx.pi)?;
    let h = h_gt_16(10, hi)?;
    let implied = vuh.entries.iter().all(|e| {
        let premises = vu2.direct.verdict_at(e.n).is_some_and(|v| v.is_ok())
            && h.report.verdict_at(e.n).is_some_and(|v| v.is_ok());
        !premises || e.verdict.is_ok()
    });
    Ok(vec![
        SubResult::from_report("flf.h_pow_above_v", "3.5", "h(n)^n > V_n", &vuh),
        SubResult::new(
            "flf.h_pow_above_v_implied",
            "3.5",
            "V_n < 16^n and h(n) > 16 imply h(n)^n > V_n",
            Outcome::from_bool(implied),
            "per-index implication check",
        )
        .with_range(10, hi),
    ])
}

fn chain_subs(ctx: &mut Context) -> Result<Vec<SubResult>> {
    let hi = ctx.horizons.vuh;
    let vu1 = check_vu1(&mut ctx.flf, 1, hi)?;
    let sas = sasvari_exponent_sign(1, hi)?;
    let nfu = check_nfu(1, hi, &ctx.pi)?;
    let vu2 = check_vu2(&mut ctx.flf, 1, hi, &ctx.pi)?;
    let bad = chain_implication(&mut ctx.flf, &vu1, &nfu, &vu2, &ctx.pi)?;

    let mut sas_sub = SubResult::from_report("flf.sasvari_exponent", "3.7", "-1/(8n) + 1/(192n^3) < 0", &sas.report);
    if !sas.certificate.is_certified() {
        sas_sub.outcome = Outcome::Fails;
    }
    sas_sub.witnesses.push(format!("24n^2 - 1 > 0 on n >= 1: {:?}", sas.certificate.verdict));
    let mut chain = SubResult::new(
        "flf.chain_implication",
        "3.9",
        "binomial and central-binomial bounds imply the pi bound",
        Outcome::from_bool(bad.is_empty()),
        "per-index exact re-derivation",
    )
    .with_range(1, hi);
    chain.witnesses = bad.iter().map(|n| format!("n={n}")).collect();
    Ok(vec![
        SubResult::from_report("flf.binomial_bound", "3.6", "V_n < (2n+1) C(2n,n)^2", &vu1),
        sas_sub,
        SubResult::from_report("flf.central_binomial", "3.8", "C(2n,n) < 4^n / sqrt(pi n)", &nfu)
            .with_note(format!("upper end of a {}-bit pi enclosure", ctx.pi.precision_bits)),
        SubResult::from_report("flf.pi_bound", "3.9", "V_n < (2n+1) 16^n / (pi n)", &vu2.scaled),
        SubResult::from_report("flf.pi_factor", "3.9", "(2n+1)/(pi n) < 1", &vu2.factor_below_one),
        SubResult::from_report("flf.below_16_pow", "3.9", "V_n < 16^n", &vu2.direct),
        chain,
    ])
}

fn h16_sub(ctx: &Context) -> Result<SubResult> {
    let h = h_gt_16(2, ctx.horizons.vuh)?;
    let mut s = SubResult::from_report("flf.h_above_16", "3.10", "h(n) > 16 for n >= 2", &h.report);
    if h.holds() {
        s.outcome = Outcome::Certified;
        s.method = "symbolic difference + tail positivity + pointwise sweep".into();
    } else {
        s.outcome = Outcome::Fails;
    }
    s.witnesses.push(format!("h(n) - 16 = {}", h.difference));
    Ok(s)
}

/// Strict log-concavity of `V_n^(1/n)` on `[2, n_hi]` with its supporting
/// certificates and the bound chain.
pub fn theorem_1_2(ctx: &mut Context, n_hi: u64) -> Result<TheoremReport> {
    require(n_hi, 10)?;
    let start = Instant::now();
    ctx.flf.extend_to(n_hi.max(ctx.horizons.vuh) + 1)?;
    let mut subs = vec![terms_sub(&mut ctx.flf, "1.2", n_hi + 1)?];
    subs.push(positivity_sub("flf.h_positive", "3.1", "h(n) > 0 and finite for n >= 2", &flf_bound(), 0, 2));
    subs.push(flf_lower_sub(ctx)?);
    let fid = ratio_map_fidelity(&mut ctx.flf, 2, n_hi)?;
    subs.push(SubResult::from_report("flf.ratio_map", "3.3", "g(n+1) = A(n) - B(n)/g(n)", &fid));
    subs.push(flf_upper_sub(ctx)?.with_note("Lemma base index 11"));

    let base = check_root_log_concave(&mut ctx.flf, 2, 9, &ctx.options)?;
    subs.push(
        SubResult::from_report("flf.base_cases", "3.4", "cleared root inequality for 2 <= n <= 9", &base)
            .with_note("decided by direct power comparison without bound certificates"),
    );
    subs.extend(vuh_subs(ctx)?);
    subs.extend(chain_subs(ctx)?);
    subs.push(h16_sub(ctx)?);

    let sweep = check_root_log_concave(&mut ctx.flf, 2, n_hi, &ctx.options)?;
    subs.push(SubResult::from_report("flf.root_log_concave", "1.4", "(V_n^(1/n))^2 > V_{n-1}^(1/(n-1)) V_{n+1}^(1/(n+1))", &sweep));
    Ok(TheoremReport::new(TheoremId::Thm1_2, subs, elapsed_ms(start)))
}

pub fn ineq_3_5(ctx: &mut Context) -> Result<TheoremReport> {
    let start = Instant::now();
    let subs = vuh_subs(ctx)?;
    Ok(TheoremReport::new(TheoremId::Ineq3_5, subs, elapsed_ms(start)))
}

fn chain_report(ctx: &mut Context, id: TheoremId, displays: &[&str]) -> Result<TheoremReport> {
    let start = Instant::now();
    let subs = chain_subs(ctx)?
        .into_iter()
        .filter(|s| displays.contains(&s.display.as_str()))
        .collect();
    Ok(TheoremReport::new(id, subs, elapsed_ms(start)))
}

pub fn ineq_3_6(ctx: &mut Context) -> Result<TheoremReport> {
    chain_report(ctx, TheoremId::Ineq3_6, &["3.6"])
}

pub fn ineq_3_8(ctx: &mut Context) -> Result<TheoremReport> {
    chain_report(ctx, TheoremId::Ineq3_8, &["3.7", "3.8"])
}

pub fn ineq_3_9(ctx: &mut Context) -> Result<TheoremReport> {
    chain_report(ctx, TheoremId::Ineq3_9, &["3.9"])
}

/// Exact check of `lower(n) < ratio(n) < upper(n)` on `[lo, hi]`.
fn gap_report(
    seq: &mut Sequence,
    property: &str,
    lo: u64,
    hi: u64,
    lower: impl Fn(u64) -> BigRat,
    upper: impl Fn(u64) -> BigRat,
) -> Result<PropertyReport> {
    let mut report = PropertyReport::new(property, seq.name().to_string(), lo, hi);
    for n in lo..=hi {
        let v = seq.ratio(n)?;
        let ok = lower(n) < v && v < upper(n);
        report.push(n, if ok { Verdict::HoldsStrictly } else { Verdict::Fails }, DecisionPath::Exact);
    }
    Ok(report)
}

/// Strict increase of both n-th root sequences on `[1, n_hi]`, plus exact
/// ratio-gap evidence for the limit 16.
pub fn proposition_4_1(ctx: &mut Context, n_hi: u64) -> Result<TheoremReport> {
    require(n_hi, 10)?;
    let start = Instant::now();
    let gap_hi = ctx.horizons.quadratic.max(n_hi);
    let scope = "pointwise monotonicity; the limit itself is evidence only, not certified";

    let mut subs = Vec::new();
    for seq in [&mut ctx.clf, &mut ctx.flf] {
        let r = check_root_monotone(seq, 1, n_hi, &ctx.options)?;
        let check = format!("{}.root_increasing", seq.name());
        subs.push(SubResult::from_report(&check, "Prop4.1", "a_{n+1}^(1/(n+1)) > a_n^(1/n)", &r).with_note(scope));
    }

    let f = clf_bound();
    let clf_gap = gap_report(
        &mut ctx.clf,
        "ratio_gap",
        5,
        gap_hi,
        |n| f.eval_i64(n as i64 - 1).unwrap(),
        |n| f.eval_i64(n as i64).unwrap(),
    )?;
    let width = BigRat::from_integers(16.into(), (gap_hi - 1).into());
    subs.push(
        SubResult::from_report("clf.ratio_gap", "Prop4.1", "|P_n/P_{n-1} - 16| < 16/(n-1)", &clf_gap)
            .with_witness(format!("n={gap_hi}: gap bound {width}"))
            .with_note(scope),
    );

    let h = flf_bound();
    let flf_gap = gap_report(
        &mut ctx.flf,
        "ratio_gap",
        11,
        gap_hi,
        |n| h.eval_i64(n as i64).unwrap(),
        |n| h.eval_i64(n as i64 - 1).unwrap(),
    )?;
    subs.push(
        SubResult::from_report("flf.ratio_gap", "Prop4.1", "h(n) < V_n/V_{n-1} < h(n-1)", &flf_gap)
            .with_note(scope),
    );
    Ok(TheoremReport::new(TheoremId::Prop4_1, subs, elapsed_ms(start)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn small_ctx() -> Context {
        let mut ctx = Context::default();
        ctx.horizons.vuh = 60;
        ctx.horizons.quadratic = 120;
        ctx
    }

    #[test]
    fn preconditions() {
        let mut ctx = small_ctx();
        assert!(theorem_1_1(&mut ctx, 6).is_err());
        assert!(theorem_1_2(&mut ctx, 9).is_err());
        assert!(proposition_4_1(&mut ctx, 9).is_err());
    }

    #[test]
    fn pipelines_pass_and_cover_every_display_id() {
        let mut ctx = small_ctx();
        let reports = [
            theorem_1_1(&mut ctx, 40).unwrap(),
            theorem_1_2(&mut ctx, 40).unwrap(),
            proposition_4_1(&mut ctx, 40).unwrap(),
        ];
        let mut seen = BTreeSet::new();
        for r in &reports {
            assert!(r.passed, "{}", r.summary_table());
            seen.extend(r.display_ids().map(str::to_string));
            let mut checks = BTreeSet::new();
            for s in &r.sub_results {
                assert!(checks.insert(s.check.clone()), "duplicate {}", s.check);
            }
        }
        let want: BTreeSet<String> = ALL_DISPLAY_IDS.iter().map(|s| s.to_string()).collect();
        assert_eq!(seen, want);
    }

    #[test]
    fn theorem_1_2_structure() {
        let mut ctx = small_ctx();
        let r = theorem_1_2(&mut ctx, 20).unwrap();
        let base = r.sub_result("flf.base_cases").unwrap();
        assert_eq!(base.range, Some([2, 9]));
        assert!(base.method.contains("power comparison"));
        let upper = r.sub_result("flf.upper_bound").unwrap();
        assert!(upper.witnesses.iter().any(|w| w == "base n=11"));
        assert_eq!(upper.outcome, Outcome::Certified);
        let lower = r.sub_result("flf.lower_bound").unwrap();
        assert_eq!(lower.outcome, Outcome::Certified);
        assert!(lower.witnesses.iter().any(|w| w == "base n=4"));
    }

    #[test]
    fn standalone_reports() {
        let mut ctx = small_ctx();
        for r in [
            lemma_2_1(&mut ctx).unwrap(),
            lemma_3_1(&mut ctx).unwrap(),
            ineq_3_5(&mut ctx).unwrap(),
            ineq_3_6(&mut ctx).unwrap(),
            ineq_3_8(&mut ctx).unwrap(),
            ineq_3_9(&mut ctx).unwrap(),
        ] {
            assert!(r.passed, "{}", r.summary_table());
            assert!(!r.sub_results.is_empty());
        }
    }

    #[test]
    fn report_json_round_trip() {
        let mut ctx = small_ctx();
        let r = lemma_2_1(&mut ctx).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: TheoremReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(text.contains("\"Lem2.1\""));
    }

    #[test]
    fn proposition_gap_at_large_n() {
        let mut ctx = small_ctx();
        ctx.horizons.quadratic = 1000;
        let r = proposition_4_1(&mut ctx, 12).unwrap();
        let gap = r.sub_result("clf.ratio_gap").unwrap();
        assert_eq!(gap.range, Some([5, 1000]));
        assert_eq!(gap.outcome, Outcome::Holds);
        let v = ctx.clf.ratio(1000).unwrap();
        let d = if v > 16u32 { &v - BigRat::from(16u32) } else { BigRat::from(16u32) - &v };
        assert!(d < BigRat::from_integers(16.into(), 999.into()));
        assert!(r.sub_results.iter().all(|s| s.note.as_deref().unwrap_or("").contains("evidence only")));
    }
}
