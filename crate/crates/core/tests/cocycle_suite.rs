//! Central-extension solver: reproduction of the closed-form cocycle tables
//! on finite windows, gauge effectiveness, window stability, and round-trips
//! back through the Jacobi checker.

use std::collections::BTreeMap;

use superalg_core::algebra::{AlgebraSpec, GeneratorFamily, Parity};
use superalg_core::builtins::builtin_algebra;
use superalg_core::cocycle::{
    build_cocycle_system, extend_algebra, same_rules, solve_central_extensions,
};
use superalg_core::poly::rat;
use superalg_core::scalar::{sidx, sint, svar, Binding, Bindings, Scalar};
use superalg_core::var::Variable;

fn poly_of(s: &Scalar) -> superalg_core::Polynomial {
    s.as_polynomial().expect("polynomial scalar").clone()
}

#[test]
fn witt_unknowns_window5() {
    let witt = builtin_algebra("witt").unwrap();
    let sys = build_cocycle_system(&witt, 5).unwrap();
    // exactly psi(L_i, L_-i) for 1 <= i <= 5
    assert_eq!(sys.unknowns.len(), 5);
    for u in &sys.unknowns {
        assert_eq!(u.left.index, -u.right.index);
        assert!(u.left.index >= 1 && u.left.index <= 5);
    }
    assert!(!sys.gauge_rows.is_empty());
}

#[test]
fn abelian_algebra_has_no_cocycle_rows() {
    let mut a = AlgebraSpec::new(
        "abelian",
        vec![],
        vec![GeneratorFamily {
            name: "L".into(),
            parity: Parity::Even,
            central: false,
        }],
    );
    // no rules at all: every bracket is zero
    let sys = build_cocycle_system(&a, 3).unwrap();
    assert_eq!(sys.system.num_rows(), sys.gauge_rows.len());
    a.name = "still-abelian".into();
}

#[test]
fn tilde_l_unknown_set_window4() {
    let t = builtin_algebra("tilde-L").unwrap();
    let sys = build_cocycle_system(&t, 4).unwrap();
    let has = |l: &str, li: i64, r: &str, ri: i64| {
        let lg = t.gen(l, li).unwrap();
        let rg = t.gen(r, ri).unwrap();
        sys.unknowns
            .iter()
            .any(|u| (u.left == lg && u.right == rg) || (u.left == rg && u.right == lg))
    };
    // Gm/Gp degree pairs are present
    assert!(has("Gp", -2, "Gm", 2));
    assert!(has("Gp", 0, "Gm", 0));
    // mixed-parity pairs are excluded structurally
    assert!(!has("L", 1, "Gp", -1));
    assert!(!has("H", 3, "Gm", -3));
}

#[test]
fn central_extension_of_witt_is_virasoro() {
    let witt = builtin_algebra("witt").unwrap();
    let ext = solve_central_extensions(&witt, 6).unwrap();
    assert_eq!(ext.dimension(), 1);
    let i = sidx("i");
    let cubic = &(&i.pow(3).unwrap() - &i) / &sint(6);
    assert_eq!(
        ext.closed_form(0, "L", "L").unwrap(),
        &poly_of(&cubic)
    );

    // round-trip: adjoining the cocycle passes Jacobi
    let extended = extend_algebra(&witt, &ext.closed_forms[0], "c_L").unwrap();
    assert!(extended.check_jacobi(4).passed());
}

#[test]
fn central_extensions_of_tilde_l_symbolic() {
    let t = builtin_algebra("tilde-L").unwrap();
    let ext = solve_central_extensions(&t, 6).unwrap();
    assert_eq!(ext.dimension(), 1, "H^2 of tilde-L is one-dimensional");

    let i = sidx("i");
    let b = svar("b");
    let one = sint(1);
    // psi(H_i, H_-i) = i
    assert_eq!(ext.closed_form(0, "H", "H").unwrap(), &poly_of(&i));
    // psi(L_i, L_-i) = (i^3 - i)(b - b^2)
    let ll = &(&i.pow(3).unwrap() - &i) * &(&b - &(&b * &b));
    assert_eq!(ext.closed_form(0, "L", "L").unwrap(), &poly_of(&ll));
    // psi(L_i, H_-i) = i(i-1)/2 (1 - 2b)
    let lh = &(&(&i * &(&i - &one)) / &sint(2)) * &(&one - &b.scale_by_int(2));
    assert_eq!(ext.closed_form(0, "L", "H").unwrap(), &poly_of(&lh));
    // psi(Gm_i, Gp_-i) = (i(i+1-2b) + b^2 - b)/2
    let gg = &(&(&i * &(&(&i + &one) - &b.scale_by_int(2))) + &(&(&b * &b) - &b)) / &sint(2);
    assert_eq!(ext.closed_form(0, "Gm", "Gp").unwrap(), &poly_of(&gg));
    // psi vanishes on same-sign odd pairs (derived, not assumed)
    assert!(ext.closed_form(0, "Gp", "Gp").unwrap().is_zero());
    assert!(ext.closed_form(0, "Gm", "Gm").unwrap().is_zero());

    // the extension table reproduces the hat-L built-in rule-for-rule
    let extended = extend_algebra(&t, &ext.closed_forms[0], "c_H").unwrap();
    let hat = builtin_algebra("hat-L").unwrap();
    assert!(same_rules(&extended, &hat));
}

#[test]
fn tilde_l_specialized_third() {
    let t = builtin_algebra("tilde-L").unwrap();
    let mut binds = Bindings::new();
    binds.insert(Variable::parameter("b"), Binding::Rat(rat(1, 3)));
    let t3 = t.specialize(&binds).unwrap();
    let ext = solve_central_extensions(&t3, 6).unwrap();
    assert_eq!(ext.dimension(), 1);

    // relations are normalization-independent: c_H := psi(H_1, H_-1),
    // c_HL := psi(L_1, H_-1)-slope etc., read off the closed forms.
    let i = superalg_core::var::idx_i();
    let at = |f: &str, g: &str, n: i64| -> Scalar {
        let p = ext.closed_form(0, f, g).unwrap().clone();
        Scalar::from_poly(p).eval_indices(&[(i.clone(), n)]).unwrap()
    };
    let c_h = at("H", "H", 1);
    assert!(!c_h.is_zero());
    // c_HL = (1 - 2b) c_H = (1/3) c_H, read at psi(L_-1, H_1) = c_HL
    assert_eq!(at("L", "H", -1), &c_h / &sint(3));
    // c_L = 6(b - b^2) c_H = (4/3) c_H, read at psi(L_2, L_-2) = c_L
    assert_eq!(at("L", "L", 2), &c_h * &srat43());
    // c_G = (b^2 - b)/2 c_H = -(1/9) c_H, read at psi(Gm_0, Gp_0)
    assert_eq!(at("Gm", "Gp", 0), &c_h / &sint(-9));
}

fn srat43() -> Scalar {
    &sint(4) / &sint(3)
}

#[test]
fn hv_tilde0_has_three_charges() {
    let hv = builtin_algebra("hv-tilde0").unwrap();
    let ext = solve_central_extensions(&hv, 5).unwrap();
    assert_eq!(ext.dimension(), 3);
    let i = sidx("i");
    let forms: Vec<_> = (0..3)
        .map(|k| {
            [
                ext.closed_form(k, "L", "L").unwrap().clone(),
                ext.closed_form(k, "L", "H").unwrap().clone(),
                ext.closed_form(k, "H", "H").unwrap().clone(),
            ]
        })
        .collect();
    // the three directions are the Virasoro charge, the mixed charge and
    // the Heisenberg charge, each normalized with its own pivot
    let cubic = poly_of(&(&(&i.pow(3).unwrap() - &i) / &sint(6)));
    let mixed = poly_of(&(&(&i * &(&i - &sint(1))) / &sint(2)));
    let linear = poly_of(&i);
    assert!(forms
        .iter()
        .any(|f| f[0] == cubic && f[1].is_zero() && f[2].is_zero()));
    assert!(forms
        .iter()
        .any(|f| f[0].is_zero() && f[1] == mixed && f[2].is_zero()));
    assert!(forms
        .iter()
        .any(|f| f[0].is_zero() && f[1].is_zero() && f[2] == linear));
}

#[test]
fn gauge_effectiveness_and_zero_residual() {
    let t = builtin_algebra("tilde-L").unwrap();
    let sys = build_cocycle_system(&t, 4).unwrap();
    let sol = sys.system.solve();
    assert!(sol.consistent);
    assert_eq!(sol.dimension(), 1);
    // every basis vector satisfies every row exactly
    for row in 0..sys.system.num_rows() {
        let r = sol.residual(&sys.system, row, &[sint(1)]);
        assert!(r.is_zero(), "row {row} residual {r}");
    }
    // gauge: psi(L_1, L_-1) and psi(L_1, H_-1) vanish identically
    let l1lm1 = sys
        .unknowns
        .iter()
        .position(|u| {
            u.left == t.gen("L", 1).unwrap() && u.right == t.gen("L", -1).unwrap()
        })
        .unwrap();
    assert!(sol.homogeneous_basis[0][l1lm1].is_zero());
    // psi(L_1, H_-1) is stored canonically as psi(H(-1), L(1))
    let hm1l1 = sys
        .unknowns
        .iter()
        .position(|u| {
            u.left == t.gen("H", -1).unwrap() && u.right == t.gen("L", 1).unwrap()
        })
        .unwrap();
    assert!(sol.homogeneous_basis[0][hm1l1].is_zero());
}

#[test]
fn window_stability_4_5_6() {
    for name in ["witt", "tilde-L"] {
        let a = builtin_algebra(name).unwrap();
        let e4 = solve_central_extensions(&a, 4).unwrap();
        let e5 = solve_central_extensions(&a, 5).unwrap();
        let e6 = solve_central_extensions(&a, 6).unwrap();
        assert_eq!(e4.dimension(), e5.dimension());
        assert_eq!(e5.dimension(), e6.dimension());
        assert_eq!(e4.closed_forms, e5.closed_forms, "{name} 4 vs 5");
        assert_eq!(e5.closed_forms, e6.closed_forms, "{name} 5 vs 6");
    }
}

#[test]
fn centered_algebra_rejected() {
    let v = builtin_algebra("virasoro").unwrap();
    assert!(build_cocycle_system(&v, 4).is_err());
}
