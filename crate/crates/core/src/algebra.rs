//! Graded Lie superalgebras presented by guarded structure-constant rules.
//!
//! An algebra is a finite list of generator families (each spanning
//! { F_i : i in Z }, or just F_0 for central families) together with bracket
//! rules per ordered family pair. A rule's summands carry coefficients that
//! are exact rational functions in the index symbols i, j and the declared
//! parameters; the target index is always i+j and an optional Kronecker
//! delta restricts a summand to i+j = 0. Reverse-order brackets are derived
//! from super-antisymmetry, never stored.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{AlgebraError, ExactError};
use crate::poly::Rational;
use crate::report::CheckReport;
use crate::scalar::{Binding, Bindings, Scalar};
use crate::threads::POOL;
use crate::var::{idx_i, idx_j, Variable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// (-1)^{|x||y|}
    pub fn sign(self, other: Parity) -> i64 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorFamily {
    pub name: String,
    pub parity: Parity,
    pub central: bool,
}

pub type FamilyId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub family: FamilyId,
    pub index: i64,
}

impl Generator {
    pub fn new(family: FamilyId, index: i64) -> Self {
        Generator { family, index }
    }
}

/// One summand of a bracket rule: coeff(i, j) * target_{i+j}, optionally
/// multiplied by the Kronecker delta [i+j = 0].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub coeff: Scalar,
    pub target: FamilyId,
    pub delta: bool,
}

/// A formal linear combination of generators with scalar coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Generator, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn generator(g: Generator) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, Scalar::one());
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &Generator) -> Scalar {
        self.terms.get(g).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, g: Generator, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(g, k)| (*g, k * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(g, k)| (*g, -k)).collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec {
    pub name: String,
    pub parameters: Vec<Variable>,
    pub families: Vec<GeneratorFamily>,
    /// Keyed by (p, q) with p <= q; the reverse orientation is derived.
    rules: BTreeMap<(FamilyId, FamilyId), Vec<Summand>>,
}

impl AlgebraSpec {
    pub fn new(name: &str, parameters: Vec<Variable>, families: Vec<GeneratorFamily>) -> Self {
        AlgebraSpec {
            name: name.to_string(),
            parameters,
            families,
            rules: BTreeMap::new(),
        }
    }

    pub fn family_id(&self, name: &str) -> Result<FamilyId, AlgebraError> {
        self.families
            .iter()
            .position(|f| f.name == name)
            .ok_or_else(|| AlgebraError::UnknownFamily(name.to_string()))
    }

    pub fn family(&self, id: FamilyId) -> &GeneratorFamily {
        &self.families[id]
    }

    pub fn parity(&self, id: FamilyId) -> Parity {
        self.families[id].parity
    }

    pub fn gen(&self, name: &str, index: i64) -> Result<Generator, AlgebraError> {
        Ok(Generator::new(self.family_id(name)?, index))
    }

    pub fn gen_name(&self, g: &Generator) -> String {
        format!("{}({})", self.families[g.family].name, g.index)
    }

    pub fn fmt_element(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        e.terms()
            .map(|(g, c)| format!("{}*{}", c, self.gen_name(g)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Install the bracket rule for the ordered pair (left, right). The pair
    /// is normalized to the stored orientation (declaration order) via
    /// super-antisymmetry when needed.
    pub fn add_rule(
        &mut self,
        left: &str,
        right: &str,
        summands: Vec<Summand>,
    ) -> Result<(), AlgebraError> {
        let p = self.family_id(left)?;
        let q = self.family_id(right)?;
        for s in &summands {
            assert!(s.target < self.families.len(), "undeclared target family");
            if self.families[s.target].central {
                assert!(
                    s.delta,
                    "central targets require the delta guard (index 0 only)"
                );
            }
        }
        if p <= q {
            self.rules.insert((p, q), summands);
        } else {
            // [A_i, B_j] given with A > B in declaration order: store
            // [B_j', A_i'] = -(-1)^{|A||B|} [A, B] with i and j exchanged.
            let sign = self.parity(p).sign(self.parity(q));
            let swapped = summands
                .into_iter()
                .map(|s| {
                    Ok(Summand {
                        coeff: (&swap_ij(&s.coeff)? * &Scalar::int(-sign)).clone(),
                        ..s
                    })
                })
                .collect::<Result<Vec<_>, ExactError>>()?;
            self.rules.insert((q, p), swapped);
        }
        Ok(())
    }

    pub fn rule(&self, p: FamilyId, q: FamilyId) -> Option<&[Summand]> {
        debug_assert!(p <= q);
        self.rules.get(&(p, q)).map(|v| v.as_slice())
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(FamilyId, FamilyId), &Vec<Summand>)> {
        self.rules.iter()
    }

    pub fn non_central_families(&self) -> impl Iterator<Item = (FamilyId, &GeneratorFamily)> {
        self.families
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.central)
    }

    pub fn has_central(&self) -> bool {
        self.families.iter().any(|f| f.central)
    }

    /// All generators with |index| <= window (central families contribute
    /// only index 0).
    pub fn window_generators(&self, window: i64) -> Vec<Generator> {
        let mut out = Vec::new();
        for (id, f) in self.families.iter().enumerate() {
            if f.central {
                out.push(Generator::new(id, 0));
            } else {
                for i in -window..=window {
                    out.push(Generator::new(id, i));
                }
            }
        }
        out
    }

    /// Bracket of two generators.
    pub fn bracket_gen(&self, x: &Generator, y: &Generator) -> Element {
        if self.families[x.family].central || self.families[y.family].central {
            return Element::zero();
        }
        let (p, q) = (x.family, y.family);
        let (key, li, rj, sign) = if p <= q {
            ((p, q), x.index, y.index, 1)
        } else {
            // [x, y] = -(-1)^{|x||y|} [y, x]
            ((q, p), y.index, x.index, -self.parity(p).sign(self.parity(q)))
        };
        let Some(summands) = self.rules.get(&key) else {
            return Element::zero();
        };
        let mut out = Element::zero();
        let sum = li + rj;
        for s in summands {
            if s.delta && sum != 0 {
                continue;
            }
            let c = s
                .coeff
                .eval_indices(&[(idx_i(), li), (idx_j(), rj)])
                .expect("bracket coefficients have no index poles");
            if c.is_zero() {
                continue;
            }
            let idx = if self.families[s.target].central { 0 } else { sum };
            out.add_term(
                Generator::new(s.target, idx),
                if sign == 1 { c } else { -&c },
            );
        }
        out
    }

    /// Bilinear extension to elements.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (gx, cx) in x.terms() {
            for (gy, cy) in y.terms() {
                let b = self.bracket_gen(gx, gy);
                out = out.add(&b.scale(&(cx * cy)));
            }
        }
        out
    }

    /// Substitute rationals (or scalars) for a subset of the parameters.
    pub fn specialize(&self, bindings: &Bindings) -> Result<AlgebraSpec, AlgebraError> {
        let mut out = self.clone();
        out.parameters
            .retain(|p| !bindings.contains_key(p));
        if !bindings.is_empty() {
            let mut label = bindings
                .iter()
                .map(|(v, b)| match b {
                    Binding::Rat(r) => format!("{}={}", v, crate::poly::fmt_rat(r)),
                    Binding::Expr(s) => format!("{}={}", v, s),
                })
                .collect::<Vec<_>>()
                .join(",");
            label.insert(0, '[');
            label.push(']');
            out.name = format!("{}{}", self.name, label);
        }
        for summands in out.rules.values_mut() {
            for s in summands.iter_mut() {
                s.coeff = s.coeff.substitute(bindings)?;
            }
        }
        Ok(out)
    }

    pub fn check_antisymmetry(&self, window: i64) -> CheckReport {
        let gens = self.window_generators(window);
        let mut report = CheckReport::new("antisymmetry", window);
        for (a, x) in gens.iter().enumerate() {
            for y in gens.iter().skip(a) {
                let sign = self.parity(x.family).sign(self.parity(y.family));
                let r = self
                    .bracket_gen(x, y)
                    .add(&self.bracket_gen(y, x).scale(&Scalar::int(sign)));
                if !r.is_zero() {
                    report.record(
                        vec![(x.family, x.index), (y.family, y.index)],
                        vec![self.gen_name(x), self.gen_name(y)],
                        self.fmt_element(&r),
                    );
                }
            }
        }
        report.finish()
    }

    /// Graded Jacobi residual for one triple:
    /// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]].
    pub fn jacobi_residual(&self, x: &Generator, y: &Generator, z: &Generator) -> Element {
        let (px, py, pz) = (
            self.parity(x.family),
            self.parity(y.family),
            self.parity(z.family),
        );
        let t1 = self
            .bracket(&Element::generator(*x), &self.bracket_gen(y, z))
            .scale(&Scalar::int(px.sign(pz)));
        let t2 = self
            .bracket(&Element::generator(*y), &self.bracket_gen(z, x))
            .scale(&Scalar::int(py.sign(px)));
        let t3 = self
            .bracket(&Element::generator(*z), &self.bracket_gen(x, y))
            .scale(&Scalar::int(pz.sign(py)));
        t1.add(&t2).add(&t3)
    }

    pub fn check_jacobi(&self, window: i64) -> CheckReport {
        let gens = self.window_generators(window);
        let n = gens.len();
        let mut triples = Vec::new();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    triples.push((a, b, c));
                }
            }
        }
        let violations: Vec<_> = POOL.install(|| {
            triples
                .par_iter()
                .filter_map(|&(a, b, c)| {
                    let (x, y, z) = (&gens[a], &gens[b], &gens[c]);
                    let r = self.jacobi_residual(x, y, z);
                    if r.is_zero() {
                        None
                    } else {
                        Some((
                            vec![(x.family, x.index), (y.family, y.index), (z.family, z.index)],
                            vec![self.gen_name(x), self.gen_name(y), self.gen_name(z)],
                            self.fmt_element(&r),
                        ))
                    }
                })
                .collect()
        });
        let mut report = CheckReport::new("jacobi", window);
        for (key, witness, residual) in violations {
            report.record(key, witness, residual);
        }
        report.finish()
    }

    /// Grading and parity invariants: a bracket of generators with indices
    /// (m, n) and parities (p, q) is supported on index m+n and parity p+q.
    pub fn check_grading(&self, window: i64) -> CheckReport {
        let gens = self.window_generators(window);
        let mut report = CheckReport::new("grading", window);
        for x in &gens {
            for y in &gens {
                let b = self.bracket_gen(x, y);
                let want_parity = self.parity(x.family).add(self.parity(y.family));
                for (g, c) in b.terms() {
                    let central = self.families[g.family].central;
                    let bad_index = !central && g.index != x.index + y.index;
                    let bad_central = central && x.index + y.index != 0;
                    let bad_parity = self.parity(g.family) != want_parity;
                    if bad_index || bad_central || bad_parity {
                        report.record(
                            vec![(x.family, x.index), (y.family, y.index)],
                            vec![self.gen_name(x), self.gen_name(y)],
                            format!("{}*{}", c, self.gen_name(g)),
                        );
                    }
                }
            }
        }
        report.finish()
    }
}

pub fn swap_ij(s: &Scalar) -> Result<Scalar, ExactError> {
    let mut b = Bindings::new();
    b.insert(idx_i(), Binding::Expr(Scalar::var(idx_j())));
    b.insert(idx_j(), Binding::Expr(Scalar::var(idx_i())));
    s.substitute(&b)
}

/// Rule-level comparison of two algebras after renaming/rescaling B's
/// families into A's and multiplying B's odd x odd rules by `mu` (the square
/// of an odd-part rescaling). `family_map` sends a B family name to an A
/// family name together with the scalar factor its elements pick up.
pub fn check_rescaled_match(
    a: &AlgebraSpec,
    b: &AlgebraSpec,
    mu: &Rational,
    family_map: &[(String, String, Scalar)],
) -> Result<CheckReport, AlgebraError> {
    let rename = |name: &str| -> (String, Scalar) {
        for (from, to, scale) in family_map {
            if from == name {
                return (to.clone(), scale.clone());
            }
        }
        (name.to_string(), Scalar::one())
    };

    // B family id -> (A family id, scale factor)
    let mut map: Vec<(FamilyId, Scalar)> = Vec::new();
    for f in &b.families {
        let (to, scale) = rename(&f.name);
        let aid = a
            .family_id(&to)
            .map_err(|_| AlgebraError::FamilyMismatch(a.name.clone(), b.name.clone()))?;
        if a.families[aid].parity != f.parity || a.families[aid].central != f.central {
            return Err(AlgebraError::FamilyMismatch(a.name.clone(), b.name.clone()));
        }
        map.push((aid, scale));
    }
    if a.families.len() != b.families.len() {
        return Err(AlgebraError::FamilyMismatch(a.name.clone(), b.name.clone()));
    }

    let mu_s = Scalar::from_rat(mu.clone());
    let mut report = CheckReport::new("rescaled-match", 0);

    // Compare pairwise over A's family ids; witness search uses small
    // concrete indices so mismatches come with a tangible generator pair.
    for p in 0..a.families.len() {
        for q in p..a.families.len() {
            if a.families[p].central || a.families[q].central {
                continue;
            }
            // Find the B pair mapping onto (p, q).
            let bp = map.iter().position(|(aid, _)| *aid == p).unwrap();
            let bq = map.iter().position(|(aid, _)| *aid == q).unwrap();
            let odd_pair =
                a.families[p].parity == Parity::Odd && a.families[q].parity == Parity::Odd;
            let factor = if odd_pair { mu_s.clone() } else { Scalar::one() };
            let mut found: Option<(i64, i64, Element)> = None;
            'scan: for i in -3i64..=3 {
                for j in -3i64..=3 {
                    let ax = Generator::new(p, i);
                    let ay = Generator::new(q, j);
                    let va = a.bracket_gen(&ax, &ay);
                    let vb = b.bracket_gen(&Generator::new(bp, i), &Generator::new(bq, j));
                    // push vb through the family map
                    let mut vb_mapped = Element::zero();
                    for (g, c) in vb.terms() {
                        let (aid, scale) = &map[g.family];
                        vb_mapped.add_term(Generator::new(*aid, g.index), &(c * scale) * &factor);
                    }
                    let r = va.sub(&vb_mapped);
                    if !r.is_zero() {
                        found = Some((i, j, r));
                        break 'scan;
                    }
                }
            }
            if let Some((i, j, r)) = found {
                let gx = Generator::new(p, i);
                let gy = Generator::new(q, j);
                report.record(
                    vec![(p, i), (q, j)],
                    vec![a.gen_name(&gx), a.gen_name(&gy)],
                    a.fmt_element(&r),
                );
            }
        }
    }
    Ok(report.finish())
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}
