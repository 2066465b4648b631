//! Exact Lagrange interpolation in one index variable.
//!
//! Used to turn window tables like psi(L_i, L_{-i}) for i = -6..6 into closed
//! forms. The fit uses the first max_degree+1 points and then checks every
//! remaining point; any mismatch is a fit failure, never an approximation.

use num::{BigInt, One};

use crate::error::ExactError;
use crate::poly::{Polynomial, Rational};
use crate::scalar::Scalar;
use crate::var::Variable;

/// Interpolate a polynomial of degree <= max_degree through the given points
/// (abscissa, value). Values may involve parameters; the result must be a
/// polynomial in the index variable and the parameters (a parameter in a
/// denominator is reported as a fit failure).
pub fn interpolate_closed_form(
    points: &[(i64, Scalar)],
    max_degree: usize,
    var: &Variable,
) -> Result<Polynomial, ExactError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut nodes: Vec<(i64, &Scalar)> = Vec::new();
    for (x, y) in points {
        if seen.insert(*x) {
            nodes.push((*x, y));
        }
    }
    if nodes.len() < max_degree + 1 {
        return Err(ExactError::FitFailure {
            reason: format!(
                "need at least {} distinct abscissae, got {}",
                max_degree + 1,
                nodes.len()
            ),
        });
    }

    let x = Polynomial::var(var.clone());
    let mut acc = Scalar::zero();
    for k in 0..=max_degree {
        let (xk, yk) = nodes[k];
        let mut basis = Polynomial::one();
        let mut denom = Rational::one();
        for (m, node) in nodes.iter().enumerate().take(max_degree + 1) {
            if m == k {
                continue;
            }
            let xm = node.0;
            basis = &basis * &(&x - &Polynomial::int(xm));
            denom *= Rational::from(BigInt::from(xk - xm));
        }
        let term = &Scalar::from_poly(basis) * &yk.checked_div(&Scalar::from_rat(denom))?;
        acc = &acc + &term;
    }

    let poly = acc
        .as_polynomial()
        .cloned()
        .ok_or_else(|| ExactError::FitFailure {
            reason: format!("interpolant `{}` is not polynomial", acc),
        })?;

    // Exactness check against every supplied point.
    for (xv, yv) in points {
        let got = Scalar::from_poly(poly.clone()).eval_indices(&[(var.clone(), *xv)])?;
        if &got != yv {
            return Err(ExactError::FitFailure {
                reason: format!(
                    "no polynomial of degree <= {} fits: at {} = {} expected {}, fitted {}",
                    max_degree, var, xv, yv, got
                ),
            });
        }
    }
    Ok(poly)
}
