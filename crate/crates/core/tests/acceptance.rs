//! Acceptance gate: one pass/fail line per criterion, exact arithmetic only.

use maclab_core::characters::{
    char_eval, char_matrix_invertible, jstar_checks, star_eval, theta_tilde, ShiftedPoly,
};
use maclab_core::conjectures::{
    check_alpha1, check_g_bounds, check_g_equals_c, check_jack_limit, check_marginal,
    check_supernabla, gj_c, gj_h, jfrak, sweep, to_alpha_gamma, SweepConfig, SweepId,
};
use maclab_core::macdonald::{
    check_cauchy, check_five_term, check_gamma_rewrite, check_j_at_one, check_orthogonality,
    check_phi_conjugation, check_pieri_support, check_pleth_spec, check_row_formula,
    check_tesler, check_triangularity, creation_chain, macdonald_j, sample_inputs,
    CreationVariant, Side,
};
use maclab_core::partitions::Partition;
use maclab_core::scalars::{big, one_minus_qt, qt_monomial, Monomial, MultiPoly, RatFun, Var};
use maclab_core::symfunc::SymFun;

fn report(criterion: u32, label: &str, passed: bool) -> bool {
    println!(
        "CRITERION {criterion}: {} — {label}",
        if passed { "PASS" } else { "FAIL" }
    );
    passed
}

/// p_mu(v_1, t^{-1} v_2, t^{-2} v_3, ...) in k variables.
fn p_mu_shifted(mu: &Partition, k: usize) -> ShiftedPoly {
    let mut f = RatFun::one();
    for &r in mu.parts() {
        let mut s = RatFun::zero();
        for i in 1..=k {
            let vi = RatFun::var(Var::v(i)).pow(r as i64);
            s = &s + &(&qt_monomial(0, -((r as i64) * (i as i64 - 1))) * &vi);
        }
        f = &f * &s;
    }
    let vars: Vec<Var> = (1..=k).map(Var::v).collect();
    ShiftedPoly::from_ratfun(&f, &vars).expect("polynomial in v")
}

fn criterion1() -> bool {
    let mut ok = true;
    for n in 0..=6u32 {
        ok &= check_row_formula(n);
        let parts = Partition::enumerate(n);
        for lam in &parts {
            ok &= check_triangularity(lam);
            ok &= check_pleth_spec(lam);
            ok &= check_j_at_one(lam);
            for rho in &parts {
                ok &= check_orthogonality(lam, rho);
            }
        }
    }
    ok
}

fn criterion2() -> bool {
    let mut ok = true;
    for m in 0..=5u32 {
        ok &= check_cauchy(m);
    }
    for n in 0..6u32 {
        for lam in Partition::enumerate(n) {
            for k in 1..=(6 - n) {
                ok &= check_pieri_support(&lam, k, Side::Integral);
                ok &= check_pieri_support(&lam, k, Side::Modified);
            }
        }
    }
    for n in 0..=4u32 {
        let cap = (n + 2).min(5);
        for lam in Partition::enumerate(n) {
            ok &= check_five_term(&lam, cap);
            ok &= check_tesler(&lam);
            ok &= check_gamma_rewrite(&lam, cap);
        }
    }
    for f in sample_inputs(4) {
        for i in -2..=2 {
            ok &= check_phi_conjugation(&f, i);
        }
    }
    ok
}

fn criterion3() -> bool {
    let mut ok = true;
    for n in 0..=5u32 {
        for lam in Partition::enumerate(n) {
            for variant in [
                CreationVariant::Thm1Integral,
                CreationVariant::Thm2Integral,
                CreationVariant::Thm1Modified,
                CreationVariant::Thm2Modified,
            ] {
                ok &= creation_chain(&lam, variant)
                    .map(|c| c.equal)
                    .unwrap_or(false);
            }
        }
    }
    ok
}

fn criterion4() -> bool {
    let mut ok = true;
    // shifted symmetry, compatibility, and the three characterizing properties
    for d in 1..=4u32 {
        for mu in Partition::enumerate(d) {
            let mut previous: Option<ShiftedPoly> = None;
            for k in 1..=3usize {
                let th = theta_tilde(&mu, k);
                ok &= th.is_shifted_symmetric();
                ok &= th.degree() <= mu.size();
                if let Some(prev) = previous {
                    ok &= th.restrict_last() == prev;
                }
                previous = Some(th);
            }
            let th = theta_tilde(&mu, 3);
            ok &= th.degree() == mu.size();
            ok &= th.top_part() == p_mu_shifted(&mu, 3);
            for n in 0..mu.size() {
                for lam in Partition::enumerate(n) {
                    if lam.len() <= 3 {
                        ok &= th.eval_partition(&lam).is_zero();
                    }
                }
            }
            // shifted Macdonald polynomial characterization
            ok &= jstar_checks(&mu, 3).all_ok();
        }
    }
    // the two character constructions agree
    for d in 1..=3u32 {
        for mu in Partition::enumerate(d) {
            for n in d..=4u32 {
                for lam in Partition::enumerate(n) {
                    let via_star = star_eval(&SymFun::p(mu.clone(), d), &lam);
                    ok &= via_star == char_eval(&mu, &lam);
                }
            }
        }
    }
    for d in 0..=5u32 {
        ok &= char_matrix_invertible(d);
    }
    for m in 1..=4u32 {
        ok &= check_jack_limit(m).passed;
    }
    ok
}

fn criterion5() -> bool {
    let mut ok = true;
    for n in 0..=5u32 {
        for lam in Partition::enumerate(n) {
            ok &= jfrak(&lam).is_ok();
        }
    }
    for m in 1..=4u32 {
        ok &= check_marginal(m).passed;
        ok &= check_alpha1(m).passed;
        ok &= check_g_equals_c(m).passed;
        for pi in Partition::enumerate(m) {
            ok &= check_supernabla(&pi).passed;
        }
    }
    for a in 1..=4u32 {
        for mu in Partition::enumerate(a) {
            for b in 1..=4u32 {
                for nu in Partition::enumerate(b) {
                    ok &= check_g_bounds(&mu, &nu).passed;
                }
            }
        }
    }
    ok
}

fn criterion6() -> bool {
    let jobs = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let config = SweepConfig {
        jobs,
        ..SweepConfig::default()
    };
    let mut ok = true;
    for n in 1..=5u32 {
        ok &= sweep(SweepId::Stanley, n, 0, &config).all_passed();
        ok &= sweep(SweepId::Matchings, n, 0, &config).all_passed();
        ok &= sweep(SweepId::BConjecture, n, 0, &config).all_passed();
    }
    ok &= sweep(SweepId::Lassalle, 4, 2, &config).all_passed();
    ok &= sweep(SweepId::Structure, 4, 0, &config).all_passed();
    ok &= sweep(SweepId::GammaPositivity, 5, 0, &config).all_passed();
    ok
}

fn criterion7() -> bool {
    let one_box = Partition::new(vec![1]);
    let mut ok = gj_c(&one_box, &one_box, &one_box) == RatFun::one();
    ok &= gj_h(&one_box, &one_box, &one_box) == RatFun::one();

    let minus_one_q = &RatFun::from_int(-1) * &RatFun::from_poly(
        &MultiPoly::one() - &MultiPoly::var(Var::q()),
    );
    ok &= char_eval(&one_box, &one_box) == minus_one_q;

    // <J-frak_[1] J-frak_[1], J-frak_[2]> = 2 alpha^2 + gamma alpha^3
    let j1 = macdonald_j(&one_box).with_degree(2);
    let j2 = macdonald_j(&Partition::new(vec![2]));
    let prod = &j1 * &j1;
    let pairing = prod.qt_scalar(&j2);
    let scale = RatFun::from_poly(one_minus_qt(0, 1).pow(4));
    let pairing = to_alpha_gamma(&(&pairing / &scale));
    let a2 = MultiPoly::monomial(Monomial::var(Var::alpha(), 2), big(2));
    let ga3 = MultiPoly::monomial(
        Monomial::var(Var::gamma(), 1).mul(&Monomial::var(Var::alpha(), 3)),
        big(1),
    );
    ok &= pairing == RatFun::from_poly(&a2 + &ga3);
    ok
}

#[test]
fn acceptance() {
    let mut all = true;
    all &= report(1, "Macdonald core (triangularity, norms, closed forms), n <= 6", criterion1());
    all &= report(2, "identity suite (Cauchy, Pieri, five-term, Tesler, Gamma rewrite, phi)", criterion2());
    all &= report(3, "creation theorems, all four variants, |lambda| <= 5", criterion3());
    all &= report(4, "character layer (shifted symmetry, J*, characterization, Jack limit)", criterion4());
    all &= report(5, "proved propositions (positivity, marginal, alpha=1, super-nabla, g)", criterion5());
    all &= report(6, "conjecture sweeps (Stanley, matchings, b, Lassalle, structure, Gamma)", criterion6());
    all &= report(7, "spot values", criterion7());
    assert!(all, "acceptance criteria failed");
}
