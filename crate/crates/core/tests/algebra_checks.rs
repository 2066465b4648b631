//! Window checks for the built-in algebras: super-antisymmetry, grading,
//! and the graded Jacobi identity, with symbolic parameters where declared.

use superalg_core::algebra::{AlgebraSpec, GeneratorFamily, Parity, Summand};
use superalg_core::builtins::builtin_algebra;
use superalg_core::poly::rat;
use superalg_core::scalar::{sidx, sint, Binding, Bindings, Scalar};
use superalg_core::var::Variable;

#[test]
fn antisymmetry_all_builtins_window4() {
    for name in ["ramond-n2", "hv-tilde0", "tilde-L", "hat-L", "virasoro", "witt", "heisenberg"] {
        let a = builtin_algebra(name).unwrap();
        let r = a.check_antisymmetry(4);
        assert!(r.passed(), "{name}: {r}");
    }
}

#[test]
fn grading_and_parity_all_builtins_window3() {
    for name in ["ramond-n2", "tilde-L", "hat-L", "virasoro"] {
        let a = builtin_algebra(name).unwrap();
        let r = a.check_grading(3);
        assert!(r.passed(), "{name}: {r}");
    }
}

#[test]
fn jacobi_ramond_window4() {
    let a = builtin_algebra("ramond-n2").unwrap();
    let r = a.check_jacobi(4);
    assert!(r.passed(), "{r}");
}

#[test]
fn jacobi_symbolic_tilde_and_hat_window3() {
    for name in ["tilde-L", "hat-L"] {
        let a = builtin_algebra(name).unwrap();
        let r = a.check_jacobi(3);
        assert!(r.passed(), "{name}: {r}");
    }
}

#[test]
fn broken_antisymmetry_detected() {
    // An [H, H] rule whose reverse is not the negation: constant delta
    // coefficient. Witness (H_1, H_-1) must be reported.
    let mut a = AlgebraSpec::new(
        "broken",
        vec![],
        vec![
            GeneratorFamily {
                name: "H".into(),
                parity: Parity::Even,
                central: false,
            },
            GeneratorFamily {
                name: "c".into(),
                parity: Parity::Even,
                central: true,
            },
        ],
    );
    a.add_rule(
        "H",
        "H",
        vec![Summand {
            coeff: sint(1),
            target: 1,
            delta: true,
        }],
    )
    .unwrap();
    let r = a.check_antisymmetry(2);
    assert!(!r.passed());
    // the pair {H_1, H_-1} is reported in canonical generator order
    assert!(r
        .violations
        .iter()
        .any(|v| v.witness == vec!["H(-1)".to_string(), "H(1)".to_string()]));
}

#[test]
fn mutated_virasoro_central_term_fails_jacobi() {
    // central term i^2/12 instead of (i^3-i)/12
    let mut a = AlgebraSpec::new(
        "virasoro-mutated",
        vec![],
        vec![
            GeneratorFamily {
                name: "L".into(),
                parity: Parity::Even,
                central: false,
            },
            GeneratorFamily {
                name: "c".into(),
                parity: Parity::Even,
                central: true,
            },
        ],
    );
    let i = sidx("i");
    let j = sidx("j");
    a.add_rule(
        "L",
        "L",
        vec![
            Summand {
                coeff: &i - &j,
                target: 0,
                delta: false,
            },
            Summand {
                coeff: &(&i * &i) / &sint(12),
                target: 1,
                delta: true,
            },
        ],
    )
    .unwrap();
    let r = a.check_jacobi(3);
    assert!(!r.passed());
    // the canonical form of the paper-cited witness (L_2, L_1, L_-3)
    assert!(r
        .violations
        .iter()
        .any(|v| v.witness == vec!["L(-3)".to_string(), "L(1)".to_string(), "L(2)".to_string()]));
}

#[test]
fn hat_l_at_half_matches_ramond_rescaled() {
    let ramond = builtin_algebra("ramond-n2").unwrap();
    let hat = builtin_algebra("hat-L").unwrap();
    let mut binds = Bindings::new();
    binds.insert(Variable::parameter("b"), Binding::Rat(rat(1, 2)));
    let hat_half = hat.specialize(&binds).unwrap();

    let map = vec![(
        "c_H".to_string(),
        "c".to_string(),
        &Scalar::one() / &sint(3),
    )];
    let r = superalg_core::algebra::check_rescaled_match(&ramond, &hat_half, &rat(2, 1), &map)
        .unwrap();
    assert!(r.passed(), "{r}");

    // mu = 1 must fail on the Gm-Gp rule
    let r = superalg_core::algebra::check_rescaled_match(&ramond, &hat_half, &rat(1, 1), &map)
        .unwrap();
    assert!(!r.passed());
    assert!(r.violations.iter().any(|v| v.witness[0].starts_with("Gm")));

    // reflexivity
    let r = superalg_core::algebra::check_rescaled_match(&ramond, &ramond, &rat(1, 1), &[])
        .unwrap();
    assert!(r.passed());
}
