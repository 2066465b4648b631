//! The built-in algebras.
//!
//! Coefficients are entered exactly as the defining bracket tables state
//! them; the check suite (Jacobi, antisymmetry, grading) then certifies the
//! tables on finite windows rather than trusting the transcription.

use crate::algebra::{AlgebraSpec, GeneratorFamily, Parity, Summand};
use crate::error::AlgebraError;
use crate::scalar::{sidx, sint, srat, svar, Scalar};
use crate::var::Variable;

pub const BUILTIN_ALGEBRAS: &[&str] = &[
    "ramond-n2",
    "hv-tilde0",
    "tilde-L",
    "hat-L",
    "virasoro",
    "witt",
    "heisenberg",
];

fn fam(name: &str, parity: Parity) -> GeneratorFamily {
    GeneratorFamily {
        name: name.to_string(),
        parity,
        central: false,
    }
}

fn central(name: &str) -> GeneratorFamily {
    GeneratorFamily {
        name: name.to_string(),
        parity: Parity::Even,
        central: true,
    }
}

fn s(coeff: Scalar, target: usize) -> Summand {
    Summand {
        coeff,
        target,
        delta: false,
    }
}

fn sd(coeff: Scalar, target: usize) -> Summand {
    Summand {
        coeff,
        target,
        delta: true,
    }
}

pub fn builtin_algebra(name: &str) -> Result<AlgebraSpec, AlgebraError> {
    let i = sidx("i");
    let j = sidx("j");
    match name {
        "witt" => {
            let mut a = AlgebraSpec::new("witt", vec![], vec![fam("L", Parity::Even)]);
            a.add_rule("L", "L", vec![s(&i - &j, 0)])?;
            Ok(a)
        }
        "virasoro" => {
            let mut a = AlgebraSpec::new(
                "virasoro",
                vec![],
                vec![fam("L", Parity::Even), central("c")],
            );
            let cubic = &(&i.pow(3).unwrap() - &i) / &sint(12);
            a.add_rule("L", "L", vec![s(&i - &j, 0), sd(cubic, 1)])?;
            Ok(a)
        }
        "heisenberg" => {
            let mut a = AlgebraSpec::new(
                "heisenberg",
                vec![],
                vec![fam("H", Parity::Even), central("c")],
            );
            a.add_rule("H", "H", vec![sd(i.clone(), 1)])?;
            Ok(a)
        }
        "hv-tilde0" => {
            let mut a = AlgebraSpec::new(
                "hv-tilde0",
                vec![],
                vec![fam("L", Parity::Even), fam("H", Parity::Even)],
            );
            a.add_rule("L", "L", vec![s(&i - &j, 0)])?;
            a.add_rule("L", "H", vec![s(-&j, 1)])?;
            Ok(a)
        }
        "ramond-n2" => {
            let mut a = AlgebraSpec::new(
                "ramond-n2",
                vec![],
                vec![
                    fam("L", Parity::Even),
                    fam("H", Parity::Even),
                    fam("Gm", Parity::Odd),
                    fam("Gp", Parity::Odd),
                    central("c"),
                ],
            );
            let (l, h, gm, gp, c) = (0, 1, 2, 3, 4);
            let cubic = &(&i.pow(3).unwrap() - &i) / &sint(12);
            a.add_rule("L", "L", vec![s(&i - &j, l), sd(cubic, c)])?;
            a.add_rule("L", "H", vec![s(-&j, h)])?;
            a.add_rule("H", "H", vec![sd(&i / &sint(3), c)])?;
            let half_i_minus_j = &(&i / &sint(2)) - &j;
            a.add_rule("L", "Gm", vec![s(half_i_minus_j.clone(), gm)])?;
            a.add_rule("L", "Gp", vec![s(half_i_minus_j, gp)])?;
            a.add_rule("H", "Gm", vec![s(sint(-1), gm)])?;
            a.add_rule("H", "Gp", vec![s(sint(1), gp)])?;
            let quad = &(&(&i * &i) - &srat(1, 4)) / &sint(3);
            a.add_rule(
                "Gm",
                "Gp",
                vec![s(sint(2), l), s(-&(&i - &j), h), sd(quad, c)],
            )?;
            Ok(a)
        }
        "tilde-L" => {
            let b = svar("b");
            let mut a = AlgebraSpec::new(
                "tilde-L",
                vec![Variable::parameter("b")],
                vec![
                    fam("L", Parity::Even),
                    fam("H", Parity::Even),
                    fam("Gm", Parity::Odd),
                    fam("Gp", Parity::Odd),
                ],
            );
            let (l, h, gm, gp) = (0, 1, 2, 3);
            a.add_rule("L", "L", vec![s(&i - &j, l)])?;
            a.add_rule("L", "H", vec![s(-&j, h)])?;
            a.add_rule("L", "Gm", vec![s(&-&j + &(&i * &b), gm)])?;
            a.add_rule("L", "Gp", vec![s(&-&j + &(&i * &(&sint(1) - &b)), gp)])?;
            a.add_rule("H", "Gm", vec![s(sint(-1), gm)])?;
            a.add_rule("H", "Gp", vec![s(sint(1), gp)])?;
            a.add_rule(
                "Gm",
                "Gp",
                vec![s(sint(1), l), s(&-&i + &(&(&i + &j) * &b), h)],
            )?;
            Ok(a)
        }
        "hat-L" => {
            let b = svar("b");
            let mut a = AlgebraSpec::new(
                "hat-L",
                vec![Variable::parameter("b")],
                vec![
                    fam("L", Parity::Even),
                    fam("H", Parity::Even),
                    fam("Gm", Parity::Odd),
                    fam("Gp", Parity::Odd),
                    central("c_H"),
                ],
            );
            let (l, h, gm, gp, ch) = (0, 1, 2, 3, 4);
            let b_minus_b2 = &b - &(&b * &b);
            let ll_central = &(&i.pow(3).unwrap() - &i) * &b_minus_b2;
            a.add_rule("L", "L", vec![s(&i - &j, l), sd(ll_central, ch)])?;
            let lh_central = &(&(&i * &(&i - &sint(1))) / &sint(2))
                * &(&sint(1) - &b.scale_by_int(2));
            a.add_rule("L", "H", vec![s(-&j, h), sd(lh_central, ch)])?;
            a.add_rule("H", "H", vec![sd(i.clone(), ch)])?;
            a.add_rule("L", "Gm", vec![s(&-&j + &(&i * &b), gm)])?;
            a.add_rule("L", "Gp", vec![s(&-&j + &(&i * &(&sint(1) - &b)), gp)])?;
            a.add_rule("H", "Gm", vec![s(sint(-1), gm)])?;
            a.add_rule("H", "Gp", vec![s(sint(1), gp)])?;
            // (i(i+1-2b) + b^2 - b)/2
            let gg_central = &(&(&i * &(&(&i + &sint(1)) - &b.scale_by_int(2)))
                + &(&(&b * &b) - &b))
                / &sint(2);
            a.add_rule(
                "Gm",
                "Gp",
                vec![
                    s(sint(1), l),
                    s(&-&i + &(&(&i + &j) * &b), h),
                    sd(gg_central, ch),
                ],
            )?;
            Ok(a)
        }
        other => Err(AlgebraError::UnknownBuiltin(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;
    use crate::poly::rat;
    use crate::scalar::{Binding, Bindings};

    #[test]
    fn ramond_bracket_values() {
        let a = builtin_algebra("ramond-n2").unwrap();
        // [L_2, L_-2] = 4 L_0 + 1/2 c
        let l2 = a.gen("L", 2).unwrap();
        let lm2 = a.gen("L", -2).unwrap();
        let v = a.bracket_gen(&l2, &lm2);
        assert_eq!(v.coeff(&a.gen("L", 0).unwrap()), sint(4));
        assert_eq!(v.coeff(&a.gen("c", 0).unwrap()), srat(1, 2));

        // [Gm_1, Gp_-1] = 2 L_0 - 2 H_0 + 1/4 c
        let v = a.bracket_gen(&a.gen("Gm", 1).unwrap(), &a.gen("Gp", -1).unwrap());
        assert_eq!(v.coeff(&a.gen("L", 0).unwrap()), sint(2));
        assert_eq!(v.coeff(&a.gen("H", 0).unwrap()), sint(-2));
        assert_eq!(v.coeff(&a.gen("c", 0).unwrap()), srat(1, 4));

        // [Gp_1, Gp_2] = 0
        let v = a.bracket_gen(&a.gen("Gp", 1).unwrap(), &a.gen("Gp", 2).unwrap());
        assert!(v.is_zero());
    }

    #[test]
    fn tilde_l_rules() {
        let a = builtin_algebra("tilde-L").unwrap();
        // [Gm_m, Gp_n] = L_{m+n} + (-m + (m+n) b) H_{m+n} at (m,n) = (2,1)
        let v = a.bracket_gen(&a.gen("Gm", 2).unwrap(), &a.gen("Gp", 1).unwrap());
        assert_eq!(v.coeff(&a.gen("L", 3).unwrap()), sint(1));
        let b = svar("b");
        assert_eq!(
            v.coeff(&a.gen("H", 3).unwrap()),
            &sint(-2) + &b.scale_by_int(3)
        );
        // [L_m, Gp_n] coefficient (-n + m(1-b)) at (1, 2): -2 + (1-b)
        let v = a.bracket_gen(&a.gen("L", 1).unwrap(), &a.gen("Gp", 2).unwrap());
        assert_eq!(
            v.coeff(&a.gen("Gp", 3).unwrap()),
            &sint(-1) - &b
        );
    }

    #[test]
    fn specialization() {
        let a = builtin_algebra("hat-L").unwrap();
        let mut binds = Bindings::new();
        binds.insert(Variable::parameter("b"), Binding::Rat(rat(1, 2)));
        let half = a.specialize(&binds).unwrap();
        // [L_i, H_j] central term (i(i-1)/2)(1-2b) vanishes at b = 1/2
        let v = half.bracket_gen(&half.gen("L", 3).unwrap(), &half.gen("H", -3).unwrap());
        assert!(v.coeff(&half.gen("c_H", 0).unwrap()).is_zero());
        // tilde-L at b=1: [L_m, Gp_n] coefficient -n
        let t = builtin_algebra("tilde-L").unwrap();
        let mut binds = Bindings::new();
        binds.insert(Variable::parameter("b"), Binding::Rat(rat(1, 1)));
        let t1 = t.specialize(&binds).unwrap();
        let v = t1.bracket_gen(&t1.gen("L", 5).unwrap(), &t1.gen("Gp", 2).unwrap());
        assert_eq!(v.coeff(&t1.gen("Gp", 7).unwrap()), sint(-2));
        // identity: empty bindings
        let same = t.specialize(&Bindings::new()).unwrap();
        assert_eq!(same, t);
    }

    #[test]
    fn reverse_brackets_derived() {
        let a = builtin_algebra("ramond-n2").unwrap();
        // [Gp_j, Gm_i] = +[Gm_i, Gp_j] (odd-odd)
        let fwd = a.bracket_gen(&a.gen("Gm", 1).unwrap(), &a.gen("Gp", 2).unwrap());
        let rev = a.bracket_gen(&a.gen("Gp", 2).unwrap(), &a.gen("Gm", 1).unwrap());
        assert_eq!(fwd, rev);
        // [H_j, L_i] = -[L_i, H_j]
        let fwd = a.bracket_gen(&a.gen("L", 1).unwrap(), &a.gen("H", 2).unwrap());
        let rev = a.bracket_gen(&a.gen("H", 2).unwrap(), &a.gen("L", 1).unwrap());
        assert_eq!(fwd, rev.neg());
        // central element brackets to zero
        let v = a.bracket_gen(&a.gen("c", 0).unwrap(), &a.gen("L", 3).unwrap());
        assert!(v.is_zero());
        let _ = Element::zero();
    }
}
