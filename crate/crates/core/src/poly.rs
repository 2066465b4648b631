//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by monomial under the graded
//! lexicographic order (total degree first, then lexicographic with earlier
//! variables weighing more). The map never stores zero coefficients, so
//! structural equality is canonical-form equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::var::Variable;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// A power product, sparse and sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    // Invariant: sorted by variable, exponents nonzero.
    powers: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { powers: Vec::new() }
    }

    pub fn var(v: Variable) -> Self {
        Monomial {
            powers: vec![(v, 1)],
        }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.powers.iter().map(|(_, e)| *e as u64).sum()
    }

    pub fn degree_of(&self, v: &Variable) -> u32 {
        self.powers
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &Variable> {
        self.powers.iter().map(|(v, _)| v)
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.powers
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut a, mut b) = (self.powers.iter().peekable(), other.powers.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => {
                        powers.push((va.clone(), *ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        powers.push((vb.clone(), *eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        powers.push((va.clone(), ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    powers.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    powers.extend(b.cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial { powers }
    }

    /// Exact monomial quotient, `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut powers = Vec::with_capacity(self.powers.len());
        let mut b = other.powers.iter().peekable();
        for (va, ea) in &self.powers {
            while let Some((vb, _)) = b.peek() {
                if vb < va {
                    return None; // divisor has a variable self lacks
                }
                break;
            }
            match b.peek() {
                Some((vb, eb)) if vb == va => {
                    if eb > ea {
                        return None;
                    }
                    if ea - eb > 0 {
                        powers.push((va.clone(), ea - eb));
                    }
                    b.next();
                }
                _ => powers.push((va.clone(), *ea)),
            }
        }
        if b.next().is_some() {
            return None;
        }
        Some(Monomial { powers })
    }
}

/// Graded lexicographic order: total degree first; on ties the earlier
/// variable with the higher exponent wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.powers.iter(), other.powers.iter());
        loop {
            match (a.next(), b.next()) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    // self has a positive power on an earlier variable
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    // Invariant: no zero coefficients.
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(rat_int(n))
    }

    pub fn var(v: Variable) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), Rational::one());
        Polynomial { terms }
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Some(c) when the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_of(&self, v: &Variable) -> u32 {
        self.terms.keys().map(|m| m.degree_of(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Variable> {
        let mut out: Vec<Variable> = Vec::new();
        for m in self.terms.keys() {
            for v in m.vars() {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out.sort();
        out
    }

    pub fn contains_var(&self, v: &Variable) -> bool {
        self.terms.keys().any(|m| m.degree_of(v) > 0)
    }

    /// Leading term under the graded lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Substitute polynomials for variables (identity for unbound variables).
    pub fn substitute_poly(&self, bindings: &BTreeMap<Variable, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (v, e) in m.powers() {
                match bindings.get(v) {
                    Some(p) => term = &term * &p.pow(*e),
                    None => {
                        term = term.mul_monomial(
                            &(0..*e).fold(Monomial::one(), |acc, _| acc.mul(&Monomial::var(v.clone()))),
                            &Rational::one(),
                        )
                    }
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Rational content: the positive rational c with self = c * (primitive
    /// integer-coefficient polynomial). Zero polynomial has content 0.
    pub fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num::integer::gcd(num_gcd, c.numer().abs());
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        if num_gcd.is_zero() {
            Rational::zero()
        } else {
            Rational::new(num_gcd, den_lcm)
        }
    }

    /// Divide by rational content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            Polynomial::insert_term(&mut quot.terms, qm, qc);
        }
        Some(quot)
    }

    /// View as univariate in `v`: coefficients by ascending degree.
    fn coeffs_in(&self, v: &Variable) -> Vec<Polynomial> {
        let deg = self.degree_of(v) as usize;
        let mut out = vec![Polynomial::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.degree_of(v) as usize;
            let rest = Monomial {
                powers: m
                    .powers()
                    .iter()
                    .filter(|(w, _)| w != v)
                    .cloned()
                    .collect(),
            };
            Polynomial::insert_term(&mut out[e].terms, rest, c.clone());
        }
        out
    }

    fn from_coeffs_in(v: &Variable, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let vm = if e == 0 {
                Monomial::one()
            } else {
                Monomial {
                    powers: vec![(v.clone(), e as u32)],
                }
            };
            out = &out + &c.mul_monomial(&vm, &Rational::one());
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Polynomial::insert_term(&mut terms, m.clone(), c.clone());
        }
        Polynomial { terms }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Polynomial::insert_term(&mut terms, m.clone(), -c.clone());
        }
        Polynomial { terms }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Polynomial::insert_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Polynomial { terms }
    }
}

// ---------------------------------------------------------------------------
// Multivariate gcd by primitive pseudo-remainder sequences. Correctness is
// the contract here; inputs stay small (few variables, low degree).
// ---------------------------------------------------------------------------

/// Pseudo-remainder of f by g in the variable v (deg_v f >= deg_v g >= 1).
fn pseudo_rem(f: &[Polynomial], g: &[Polynomial], v: &Variable) -> Vec<Polynomial> {
    let mut r: Vec<Polynomial> = f.to_vec();
    let dg = g.len() - 1;
    let lg = &g[dg];
    loop {
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
        if r.len() <= dg {
            return r;
        }
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r := lg * r - lr * v^(dr-dg) * g
        for c in r.iter_mut() {
            *c = &*c * lg;
        }
        for (k, gc) in g.iter().enumerate() {
            let t = &lr * gc;
            r[dr - dg + k] = &r[dr - dg + k] - &t;
        }
        debug_assert!(r[dr].is_zero());
        let _ = v;
    }
}

fn gcd_many(polys: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for p in polys {
        acc = gcd(&acc, p);
        if acc.is_one() {
            return acc;
        }
    }
    acc
}

/// Gcd of multivariate polynomials over the rationals, returned primitive
/// with positive leading coefficient (gcd of constants is 1).
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    // Main variable: the latest variable present in either operand.
    let va = a.vars();
    let vb = b.vars();
    let v = match va.iter().chain(vb.iter()).max() {
        Some(v) => v.clone(),
        None => return Polynomial::one(), // both constants
    };
    let da = a.degree_of(&v);
    let db = b.degree_of(&v);
    if da == 0 && db == 0 {
        // v comes from vars() so one of them must contain it
        unreachable!("main variable absent from both operands");
    }
    if da == 0 {
        let cont_b = gcd_many(&b.coeffs_in(&v));
        return gcd(a, &cont_b);
    }
    if db == 0 {
        let cont_a = gcd_many(&a.coeffs_in(&v));
        return gcd(&cont_a, b);
    }

    let ca = a.coeffs_in(&v);
    let cb = b.coeffs_in(&v);
    let cont_a = gcd_many(&ca);
    let cont_b = gcd_many(&cb);
    let pp_a: Vec<Polynomial> = ca.iter().map(|c| c.div_exact(&cont_a).unwrap()).collect();
    let pp_b: Vec<Polynomial> = cb.iter().map(|c| c.div_exact(&cont_b).unwrap()).collect();

    let (mut r0, mut r1) = if da >= db { (pp_a, pp_b) } else { (pp_b, pp_a) };
    while !r1.is_empty() {
        let rem = pseudo_rem(&r0, &r1, &v);
        r0 = r1;
        r1 = primitive_in(&rem, &v);
    }
    let g = Polynomial::from_coeffs_in(&v, &r0);
    let g = primitive_poly_in(&g, &v);
    let cont_gcd = gcd(&cont_a, &cont_b);
    (&g * &cont_gcd).primitive_part()
}

fn primitive_in(coeffs: &[Polynomial], _v: &Variable) -> Vec<Polynomial> {
    let cont = gcd_many(coeffs);
    if cont.is_zero() {
        return Vec::new();
    }
    coeffs
        .iter()
        .map(|c| c.div_exact(&cont).unwrap())
        .collect()
}

fn primitive_poly_in(p: &Polynomial, v: &Variable) -> Polynomial {
    let cont = gcd_many(&p.coeffs_in(v));
    if cont.is_zero() {
        return Polynomial::zero();
    }
    p.div_exact(&cont).unwrap().primitive_part()
}

// ---------------------------------------------------------------------------
// Display: terms in descending graded-lex order, integer-normalized by the
// caller (see Scalar); here coefficients print as exact rationals.
// ---------------------------------------------------------------------------

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                write!(f, "{}", fmt_rat(&abs))?;
            } else {
                if !coeff_is_one {
                    write!(f, "{}*", fmt_rat(&abs))?;
                }
                let mut firstv = true;
                for (v, e) in m.powers() {
                    if !firstv {
                        f.write_str("*")?;
                    }
                    firstv = false;
                    if *e == 1 {
                        write!(f, "{}", v)?;
                    } else {
                        write!(f, "{}^{}", v, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn fmt_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::var::{idx_i, idx_j, Variable};

    fn pv(name: &str) -> Polynomial {
        Polynomial::var(Variable::parameter(name))
    }

    #[test]
    fn grlex_order() {
        let b = Variable::parameter("b");
        let i = Variable::index("i");
        let bi = Monomial::var(b.clone()).mul(&Monomial::var(i.clone()));
        let b2 = Monomial::var(b.clone()).mul(&Monomial::var(b.clone()));
        let i3 = Monomial::var(i.clone())
            .mul(&Monomial::var(i.clone()))
            .mul(&Monomial::var(i.clone()));
        assert!(b2 > bi); // same degree, b-power decides
        assert!(i3 > b2); // higher total degree
        assert!(Monomial::one() < bi);
    }

    #[test]
    fn arithmetic_and_division() {
        let b = pv("b");
        let one = Polynomial::one();
        // (b^2 - 1) / (b - 1) = b + 1
        let p = &(&b * &b) - &one;
        let d = &b - &one;
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, &b + &one);
        // non-exact division is detected
        assert!((&p + &one).div_exact(&d).is_none());
    }

    #[test]
    fn gcd_univariate() {
        let b = pv("b");
        let one = Polynomial::one();
        let p = &(&b * &b) - &b; // b(b-1)
        let q = &(&b * &b) - &one; // (b-1)(b+1)
        let g = gcd(&p, &q);
        assert_eq!(g, &b - &one);
    }

    #[test]
    fn gcd_multivariate() {
        let a = pv("a");
        let b = pv("b");
        let i = Polynomial::var(idx_i());
        let j = Polynomial::var(idx_j());
        let common = &(&a - &j) + &(&i * &b);
        let f = &common * &(&a + &b);
        let g = &common * &(&i - &j);
        let got = gcd(&f, &g);
        assert_eq!(got, common.primitive_part());
    }

    #[test]
    fn content_and_primitive() {
        let b = pv("b");
        let p = &b.scale(&rat(2, 3)) + &Polynomial::constant(rat(4, 3));
        assert_eq!(p.content(), rat(2, 3));
        let pp = p.primitive_part();
        assert_eq!(pp, &b + &Polynomial::int(2));
    }

    #[test]
    fn display_descending() {
        let i = Polynomial::var(idx_i());
        let p = &(&(&i * &i) * &i) - &i;
        assert_eq!(p.to_string(), "i^3-i");
    }
}
