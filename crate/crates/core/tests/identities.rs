//! Identity suite: basis facts, kernel identities, operator relations and
//! creation chains, all checked by exact arithmetic.

use maclab_core::macdonald::{
    check_cauchy, check_five_term, check_gamma_rewrite, check_j_at_one, check_orthogonality,
    check_phi_conjugation, check_pieri_support, check_pleth_spec, check_row_formula,
    check_tesler, check_triangularity, creation_chain, identity_suite, sample_inputs,
    CreationVariant, Side,
};
use maclab_core::partitions::Partition;

#[test]
fn suite_small_all_pass() {
    for (label, passed) in identity_suite(3) {
        assert!(passed, "identity {label} failed at max size 3");
    }
}

#[test]
fn basis_facts_to_six() {
    for n in 0..=6u32 {
        assert!(check_row_formula(n), "row formula failed at {n}");
        let parts = Partition::enumerate(n);
        for lam in &parts {
            assert!(check_triangularity(lam), "triangularity failed at {lam}");
            assert!(check_pleth_spec(lam), "plethystic spec failed at {lam}");
            assert!(check_j_at_one(lam), "evaluation at one failed at {lam}");
            for rho in &parts {
                assert!(
                    check_orthogonality(lam, rho),
                    "orthogonality failed at {lam}, {rho}"
                );
            }
        }
    }
}

#[test]
fn cauchy_to_five() {
    for m in 0..=5u32 {
        assert!(check_cauchy(m), "Cauchy kernel failed at degree {m}");
    }
}

#[test]
fn pieri_support_to_six() {
    for n in 0..6u32 {
        for lam in Partition::enumerate(n) {
            for k in 1..=(6 - n) {
                assert!(
                    check_pieri_support(&lam, k, Side::Integral),
                    "integral Pieri support failed at {lam}, k={k}"
                );
                assert!(
                    check_pieri_support(&lam, k, Side::Modified),
                    "modified Pieri support failed at {lam}, k={k}"
                );
            }
        }
    }
}

#[test]
fn operator_relations_to_four() {
    for n in 0..=4u32 {
        let cap = (n + 2).min(5);
        for lam in Partition::enumerate(n) {
            assert!(check_five_term(&lam, cap), "five-term failed at {lam}");
            assert!(check_tesler(&lam), "Tesler identity failed at {lam}");
            assert!(
                check_gamma_rewrite(&lam, cap),
                "Gamma rewrite failed at {lam}"
            );
        }
    }
}

#[test]
fn phi_conjugation_on_generic_inputs() {
    for f in sample_inputs(4) {
        for i in -2..=2 {
            assert!(
                check_phi_conjugation(&f, i),
                "phi conjugation failed at shift {i}"
            );
        }
    }
}

#[test]
fn creation_chains_to_five() {
    for n in 0..=5u32 {
        for lam in Partition::enumerate(n) {
            for variant in [
                CreationVariant::Thm1Integral,
                CreationVariant::Thm2Integral,
                CreationVariant::Thm1Modified,
                CreationVariant::Thm2Modified,
            ] {
                let cert = creation_chain(&lam, variant).expect("chain runs");
                assert!(cert.equal, "{} chain failed at {lam}", variant.name());
            }
        }
    }
}
