//! Central extensions via graded 2-cocycles on a finite window.
//!
//! Unknowns are the values psi(x, y) on degree-paired (index sum zero),
//! parity-matched generator pairs; super-symmetry of psi is folded into a
//! canonical orientation. Rows come from the graded cocycle identity on all
//! window triples, plus the gauge normalization rows that pin down one
//! representative per cohomology class. Everything is solved exactly over
//! the rational-function field, then window tables are fitted to closed
//! forms (degree <= 3) in the index variable.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraSpec, Element, Generator, Parity, Summand};
use crate::error::{AlgebraError, ExactError};
use crate::interp::interpolate_closed_form;
use crate::linsolve::LinearSystem;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::var::idx_i;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CocycleUnknown {
    /// Canonical orientation: left >= right in (family, index) order.
    pub left: Generator,
    pub right: Generator,
}

#[derive(Debug)]
pub struct CocycleSystem {
    pub algebra: AlgebraSpec,
    pub window: i64,
    pub unknowns: Vec<CocycleUnknown>,
    pub system: LinearSystem,
    /// Indices of the gauge rows within the system.
    pub gauge_rows: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ExtensionBasis {
    pub window: i64,
    pub unknowns: Vec<CocycleUnknown>,
    pub unknown_names: Vec<String>,
    /// One normalized vector per cohomology dimension.
    pub basis: Vec<Vec<Scalar>>,
    /// Closed forms per basis vector: (family F, family G) -> p(i) with
    /// p(i) = psi(F_i, G_{-i}), exact on the whole window.
    pub closed_forms: Vec<BTreeMap<(String, String), Polynomial>>,
}

impl ExtensionBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn closed_form(&self, vec: usize, f: &str, g: &str) -> Option<&Polynomial> {
        self.closed_forms
            .get(vec)?
            .get(&(f.to_string(), g.to_string()))
    }
}

enum PsiRef {
    Zero,
    Unknown(usize, i64),
}

fn canonical(x: &Generator, y: &Generator) -> bool {
    (x.family, x.index) >= (y.family, y.index)
}

pub fn build_cocycle_system(
    alg: &AlgebraSpec,
    window: i64,
) -> Result<CocycleSystem, AlgebraError> {
    if alg.has_central() {
        return Err(AlgebraError::HasCenter {
            algebra: alg.name.clone(),
        });
    }
    if alg.family_id("L").is_err() {
        return Err(AlgebraError::MissingGrading(alg.name.clone()));
    }

    let gens = alg.window_generators(window);

    // Unknown enumeration: canonical degree-paired parity-matched pairs.
    let mut unknowns = Vec::new();
    for x in &gens {
        for y in &gens {
            if !canonical(x, y) || x.index + y.index != 0 {
                continue;
            }
            if alg.parity(x.family) != alg.parity(y.family) {
                continue;
            }
            if x == y && alg.parity(x.family) == Parity::Even {
                continue; // psi(x, x) = 0 for even x
            }
            unknowns.push(CocycleUnknown {
                left: *x,
                right: *y,
            });
        }
    }

    let mut system = LinearSystem::new();
    for u in &unknowns {
        system.unknown(&format!(
            "psi({},{})",
            alg.gen_name(&u.left),
            alg.gen_name(&u.right)
        ));
    }

    let psi = |x: &Generator, y: &Generator| -> PsiRef {
        if x.index + y.index != 0 || alg.parity(x.family) != alg.parity(y.family) {
            return PsiRef::Zero;
        }
        let (cx, cy, sign) = if canonical(x, y) {
            (*x, *y, 1_i64)
        } else {
            // psi(x, y) = -(-1)^{|x||y|} psi(y, x)
            (*y, *x, -alg.parity(x.family).sign(alg.parity(y.family)))
        };
        match unknowns.iter().position(|u| u.left == cx && u.right == cy) {
            Some(k) => PsiRef::Unknown(k, sign),
            None => PsiRef::Zero, // structural zero (even diagonal)
        }
    };

    // Cocycle identity rows. Only triples with index sum 0 and even total
    // parity can produce a nonzero row, and for those every referenced pair
    // automatically lies inside the window.
    let n = gens.len();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let (x, y, z) = (&gens[a], &gens[b], &gens[c]);
                if x.index + y.index + z.index != 0 {
                    continue;
                }
                let (px, py, pz) = (
                    alg.parity(x.family),
                    alg.parity(y.family),
                    alg.parity(z.family),
                );
                let odd_count = [px, py, pz].iter().filter(|p| **p == Parity::Odd).count();
                if odd_count % 2 == 1 {
                    continue;
                }
                let mut coeffs: Vec<(usize, Scalar)> = Vec::new();
                let mut push = |sgn: i64, bracket: &Element, w: &Generator| {
                    for (g, coeff) in bracket.terms() {
                        match psi(g, w) {
                            PsiRef::Zero => {}
                            PsiRef::Unknown(k, s) => {
                                coeffs.push((k, coeff.scale_by_int(sgn * s)));
                            }
                        }
                    }
                };
                push(px.sign(pz), &alg.bracket_gen(x, y), z);
                push(py.sign(px), &alg.bracket_gen(y, z), x);
                push(pz.sign(py), &alg.bracket_gen(z, x), y);
                if coeffs.is_empty() {
                    continue;
                }
                let label = format!(
                    "cocycle({},{},{})",
                    alg.gen_name(x),
                    alg.gen_name(y),
                    alg.gen_name(z)
                );
                system.add_row(coeffs, Scalar::zero(), &label);
            }
        }
    }

    // Gauge rows: psi(L_0, e) = 0, psi(L_1, L_-1) = 0, psi(L_1, H_-1) = 0,
    // psi(H_1, G_-1^pm) = 0 -- each added only when the referenced pair is
    // an actual unknown (mixed-parity pairs are structural zeros already).
    let mut gauge_rows = Vec::new();
    let mut add_gauge = |system: &mut LinearSystem,
                         gauge_rows: &mut Vec<usize>,
                         x: Generator,
                         y: Generator,
                         label: String| {
        if let PsiRef::Unknown(k, s) = psi(&x, &y) {
            let row = system.num_rows();
            system.add_row(vec![(k, Scalar::int(s))], Scalar::zero(), &label);
            gauge_rows.push(row);
        }
    };
    let l = alg.family_id("L")?;
    for e in &gens {
        add_gauge(
            &mut system,
            &mut gauge_rows,
            Generator::new(l, 0),
            *e,
            format!("gauge(L(0),{})", alg.gen_name(e)),
        );
    }
    add_gauge(
        &mut system,
        &mut gauge_rows,
        Generator::new(l, 1),
        Generator::new(l, -1),
        "gauge(L(1),L(-1))".to_string(),
    );
    if let Ok(h) = alg.family_id("H") {
        add_gauge(
            &mut system,
            &mut gauge_rows,
            Generator::new(l, 1),
            Generator::new(h, -1),
            "gauge(L(1),H(-1))".to_string(),
        );
        for gname in ["Gm", "Gp"] {
            if let Ok(g) = alg.family_id(gname) {
                add_gauge(
                    &mut system,
                    &mut gauge_rows,
                    Generator::new(h, 1),
                    Generator::new(g, -1),
                    format!("gauge(H(1),{}(-1))", gname),
                );
            }
        }
    }

    Ok(CocycleSystem {
        algebra: alg.clone(),
        window,
        unknowns,
        system,
        gauge_rows,
    })
}

/// Pivot scan order for basis normalization: smallest presentation |index|
/// first, then the family pair in declaration order, positive index before
/// negative.
fn pivot_key(u: &CocycleUnknown) -> (i64, usize, usize, i64) {
    let (f, g) = (u.right.family, u.left.family);
    let idx = if f == g {
        u.left.index.max(u.right.index)
    } else {
        u.right.index
    };
    (idx.abs(), f, g, -idx.signum())
}

/// Sign relating a stored canonical coordinate psi(G_{-i}, F_i) to its
/// presentation value psi(F_i, G_{-i}).
fn presentation_sign(alg: &AlgebraSpec, u: &CocycleUnknown) -> i64 {
    if u.left.family == u.right.family {
        1
    } else {
        -alg.parity(u.left.family).sign(alg.parity(u.right.family))
    }
}

pub fn solve_central_extensions(
    alg: &AlgebraSpec,
    window: i64,
) -> Result<ExtensionBasis, AlgebraError> {
    if window < 3 {
        return Err(AlgebraError::Exact(ExactError::Invalid(
            "cocycle window must be >= 3 to pin cubic closed forms".into(),
        )));
    }
    let sys = build_cocycle_system(alg, window)?;
    let sol = sys.system.solve();
    assert!(sol.consistent, "homogeneous system cannot be inconsistent");

    // Normalize each basis vector: divide by the value at the first pivot
    // candidate, where a candidate coordinate must divide every other
    // coordinate (so the normalized vector is denominator-free in the
    // parameters). Candidates are scanned smallest |index| first.
    let mut order: Vec<usize> = (0..sys.unknowns.len()).collect();
    order.sort_by_key(|&k| pivot_key(&sys.unknowns[k]));

    let mut basis: Vec<Vec<Scalar>> = sol.homogeneous_basis.clone();
    for v in basis.iter_mut() {
        let mut pivot: Option<usize> = None;
        for &k in &order {
            if v[k].is_zero() {
                continue;
            }
            let divides_all = v.iter().all(|q| {
                q.checked_div(&v[k])
                    .map(|r| r.is_polynomial())
                    .unwrap_or(false)
            });
            if divides_all {
                pivot = Some(k);
                break;
            }
        }
        let pivot = pivot.or_else(|| order.iter().copied().find(|&k| !v[k].is_zero()));
        if let Some(p) = pivot {
            // scale so the pivot's *presentation* value becomes 1
            let s = presentation_sign(&sys.algebra, &sys.unknowns[p]);
            let inv = v[p].recip().expect("pivot is nonzero").scale_by_int(s);
            for q in v.iter_mut() {
                *q = &*q * &inv;
            }
        }
    }
    basis.sort_by_key(|v| {
        order
            .iter()
            .copied()
            .find(|&k| !v[k].is_zero())
            .map(|k| pivot_key(&sys.unknowns[k]))
            .unwrap_or((i64::MAX, usize::MAX, usize::MAX, 0))
    });

    // Window tables per presentation pair, then closed-form fits.
    let alg_ref = &sys.algebra;
    let mut closed_forms = Vec::new();
    for v in &basis {
        let mut tables: BTreeMap<(usize, usize), Vec<(i64, Scalar)>> = BTreeMap::new();
        for (k, u) in sys.unknowns.iter().enumerate() {
            let (f, g) = (u.right.family, u.left.family);
            let entry = tables.entry((f, g)).or_default();
            if f == g {
                let i = u.left.index.max(u.right.index);
                let parity_sign = if alg_ref.parity(f) == Parity::Even { -1 } else { 1 };
                entry.push((i, v[k].clone()));
                if i != 0 {
                    entry.push((-i, v[k].scale_by_int(parity_sign)));
                }
            } else {
                // canonical psi(G_{-i}, F_i); presentation value is
                // psi(F_i, G_{-i}) = -(-1)^{|F||G|} psi(G_{-i}, F_i)
                let i = u.right.index;
                let s = -alg_ref.parity(f).sign(alg_ref.parity(g));
                entry.push((i, v[k].scale_by_int(s)));
            }
        }
        // structural zero at i = 0 for even same-family pairs
        for ((f, g), pts) in tables.iter_mut() {
            if f == g && alg_ref.parity(*f) == Parity::Even && !pts.iter().any(|(i, _)| *i == 0)
            {
                pts.push((0, Scalar::zero()));
            }
            pts.sort_by_key(|(i, _)| *i);
        }

        let mut forms = BTreeMap::new();
        for ((f, g), pts) in &tables {
            let p = interpolate_closed_form(pts, 3, &idx_i()).map_err(|e| {
                AlgebraError::Exact(ExactError::FitFailure {
                    reason: format!(
                        "pair ({},{}): {} (window too small?)",
                        alg_ref.family(*f).name,
                        alg_ref.family(*g).name,
                        e
                    ),
                })
            })?;
            forms.insert(
                (
                    alg_ref.family(*f).name.clone(),
                    alg_ref.family(*g).name.clone(),
                ),
                p,
            );
        }
        closed_forms.push(forms);
    }

    let names = sys
        .unknowns
        .iter()
        .map(|u| {
            format!(
                "psi({},{})",
                alg_ref.gen_name(&u.left),
                alg_ref.gen_name(&u.right)
            )
        })
        .collect();

    Ok(ExtensionBasis {
        window,
        unknowns: sys.unknowns,
        unknown_names: names,
        basis,
        closed_forms,
    })
}

/// Adjoin a central generator realizing one solved cocycle: every nonzero
/// closed form p(i) for the pair (F, G) becomes a delta-guarded summand
/// p(i) * [i+j=0] * central on the bracket [F_i, G_j].
pub fn extend_algebra(
    alg: &AlgebraSpec,
    forms: &BTreeMap<(String, String), Polynomial>,
    central_name: &str,
) -> Result<AlgebraSpec, AlgebraError> {
    let mut families = alg.families.clone();
    families.push(crate::algebra::GeneratorFamily {
        name: central_name.to_string(),
        parity: Parity::Even,
        central: true,
    });
    let central_id = families.len() - 1;
    let mut out = AlgebraSpec::new(&alg.name, alg.parameters.clone(), families);
    for (&(p, q), summands) in alg.rules() {
        let (pn, qn) = (alg.family(p).name.clone(), alg.family(q).name.clone());
        out.add_rule(&pn, &qn, summands.clone())?;
    }
    for ((f, g), p) in forms {
        if p.is_zero() {
            continue;
        }
        let summand = Summand {
            coeff: Scalar::from_poly(p.clone()),
            target: central_id,
            delta: true,
        };
        let fp = out.family_id(f)?;
        let gq = out.family_id(g)?;
        debug_assert!(fp <= gq);
        let mut existing: Vec<Summand> =
            out.rule(fp, gq).map(|s| s.to_vec()).unwrap_or_default();
        existing.push(summand);
        out.add_rule(f, g, existing)?;
    }
    out.name = format!("{}+{}", alg.name, central_name);
    Ok(out)
}

/// Rule-level equality ignoring the algebra name (used to compare a computed
/// extension against a built-in table).
pub fn same_rules(a: &AlgebraSpec, b: &AlgebraSpec) -> bool {
    if a.families != b.families {
        return false;
    }
    let ar: Vec<_> = a.rules().collect();
    let br: Vec<_> = b.rules().collect();
    if ar.len() != br.len() {
        return false;
    }
    for ((ka, va), (kb, vb)) in ar.iter().zip(br.iter()) {
        if ka != kb {
            return false;
        }
        let mut sa: Vec<Summand> = va.to_vec();
        let mut sb: Vec<Summand> = vb.to_vec();
        let key = |s: &Summand| (s.target, s.delta);
        sa.sort_by_key(key);
        sb.sort_by_key(key);
        if sa != sb {
            return false;
        }
    }
    true
}
