//! Exact rational functions in canonical form.
//!
//! A `Scalar` is a fraction of multivariate polynomials with gcd(num, den) = 1
//! and a monic denominator under the graded lex order. Canonical form makes
//! structural equality coincide with mathematical equality, which is what
//! every identity check in this crate ultimately relies on.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::One;

use crate::error::ExactError;
use crate::poly::{gcd, Polynomial, Rational};
use crate::var::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Polynomial,
    den: Polynomial,
}

/// Substitution target: an exact rational or a full scalar.
#[derive(Debug, Clone)]
pub enum Binding {
    Rat(Rational),
    Expr(Scalar),
}

impl From<Rational> for Binding {
    fn from(r: Rational) -> Self {
        Binding::Rat(r)
    }
}

impl From<Scalar> for Binding {
    fn from(s: Scalar) -> Self {
        Binding::Expr(s)
    }
}

pub type Bindings = BTreeMap<Variable, Binding>;

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::from_poly(Polynomial::int(n))
    }

    pub fn from_rat(r: Rational) -> Self {
        Scalar::from_poly(Polynomial::constant(r))
    }

    pub fn var(v: Variable) -> Self {
        Scalar::from_poly(Polynomial::var(v))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Scalar {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// Canonicalizing constructor. Errors on a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let g = gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(Scalar { num, den })
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Some(r) when the scalar is the exact rational constant r.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_constant()
    }

    /// True when the scalar is a polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Scalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Scalar::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Scalar::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, e: i32) -> Result<Scalar, ExactError> {
        let mut base = self.clone();
        let mut exp = e;
        if exp < 0 {
            base = base.recip()?;
            exp = -exp;
        }
        let mut out = Scalar::one();
        for _ in 0..exp {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Substitution is a ring homomorphism wherever the denominator stays
    /// nonzero; a vanishing denominator is reported as a pole.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Scalar, ExactError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let num = substitute_poly(&self.num, bindings)?;
        let den = substitute_poly(&self.den, bindings)?;
        if den.is_zero() {
            return Err(ExactError::Pole {
                expr: self.to_string(),
            });
        }
        num.checked_div(&den)
    }

    /// Substitute concrete integers for index variables (the evaluation path
    /// used by bracket and action rules).
    pub fn eval_indices(&self, vals: &[(Variable, i64)]) -> Result<Scalar, ExactError> {
        let mut b = Bindings::new();
        for (v, n) in vals {
            debug_assert!(v.is_index(), "only index variables take integer values");
            b.insert(v.clone(), Binding::Rat(Rational::from(num::BigInt::from(*n))));
        }
        self.substitute(&b)
    }

    pub fn vars(&self) -> Vec<Variable> {
        let mut vs = self.num.vars();
        for v in self.den.vars() {
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        vs.sort();
        vs
    }

    pub fn contains_var(&self, v: &Variable) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }
}

fn substitute_poly(p: &Polynomial, bindings: &Bindings) -> Result<Scalar, ExactError> {
    let mut out = Scalar::zero();
    for (m, c) in p.terms() {
        let mut term = Scalar::from_rat(c.clone());
        for (v, e) in m.powers() {
            let factor = match bindings.get(v) {
                Some(Binding::Rat(r)) => Scalar::from_rat(r.clone()),
                Some(Binding::Expr(s)) => s.clone(),
                None => Scalar::var(v.clone()),
            };
            term = &term * &factor.pow(*e as i32)?;
        }
        out = &out + &term;
    }
    Ok(out)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::new(num, den).expect("denominator product is nonzero")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::new(num, den).expect("denominator product is nonzero")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominator product is nonzero")
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Canonical string form. The rational content is pulled out so that e.g.
/// the cubic cocycle value prints as `(i^3-i)/6` rather than with fractional
/// coefficients; this string is what reports and golden files contain.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let nc = self.num.content();
        let dc = self.den.content();
        let num_pp = self.num.scale(&nc.recip());
        let den_pp = self.den.scale(&dc.recip());
        // self = (nc/dc) * num_pp/den_pp with integer-primitive parts
        let c = &nc / &dc;
        let top = num_pp.scale(&Rational::from(c.numer().clone()));
        let bottom = den_pp.scale(&Rational::from(c.denom().clone()));
        let top_s = if top.num_terms() > 1 && !bottom.is_one() {
            format!("({})", top)
        } else {
            top.to_string()
        };
        if bottom.is_one() {
            f.write_str(&top_s)
        } else {
            let bottom_s = if bottom.num_terms() > 1 {
                format!("({})", bottom)
            } else {
                bottom.to_string()
            };
            write!(f, "{}/{}", top_s, bottom_s)
        }
    }
}

pub fn srat(n: i64, d: i64) -> Scalar {
    Scalar::from_rat(crate::poly::rat(n, d))
}

pub fn sint(n: i64) -> Scalar {
    Scalar::int(n)
}

pub fn svar(name: &str) -> Scalar {
    Scalar::var(Variable::parameter(name))
}

pub fn sidx(name: &str) -> Scalar {
    Scalar::var(Variable::index(name))
}


impl Scalar {
    pub fn scale_by_int(&self, n: i64) -> Scalar {
        self * &Scalar::int(n)
    }
}
