use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::chromatic::{chromatic_polynomial, falling_factorial, magnitude};
use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::network::{closure_graph, NetworkInstance};

/// Numbers of chambers and bounded chambers of a real arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberCounts {
    pub total: BigUint,
    pub bounded: BigUint,
}

impl ChamberCounts {
    /// `|p(-1)|` and `|p(1)|` of a characteristic polynomial.
    pub fn from_characteristic(p: &IntPolynomial) -> Self {
        ChamberCounts {
            total: magnitude(p.eval_i64(-1)),
            bounded: magnitude(p.eval_i64(1)),
        }
    }
}

/// `χ_ĝ / (t)_m`, the characteristic polynomial of the Dirichlet arrangement.
pub fn precoloring_polynomial(net: &NetworkInstance) -> Result<IntPolynomial> {
    let chi = chromatic_polynomial(&closure_graph(net));
    chi.div_exact(&falling_factorial(net.m()))
}

/// Counts proper colorings of `g` with `colors` colors that give the boundary
/// nodes, in label order, the colors `0, 1, …, m-1`.
pub fn precoloring_count(net: &NetworkInstance, colors: usize, limits: &Limits) -> Result<BigUint> {
    if colors < net.m() {
        return Err(Error::TooFewColors {
            min: net.m(),
            got: colors,
        });
    }
    let states = (colors as u128).checked_pow(net.n() as u32).unwrap_or(u128::MAX);
    Limits::check("precoloring enumeration", states, limits.max_states)?;

    let g = net.graph();
    let mut color = vec![usize::MAX; g.vertex_count()];
    for (p, &b) in net.boundary().iter().enumerate() {
        color[b] = p;
    }
    fn go(net: &NetworkInstance, pos: usize, colors: usize, color: &mut [usize]) -> u64 {
        let Some(&v) = net.interior().get(pos) else {
            return 1;
        };
        let mut total = 0;
        for c in 0..colors {
            if net.graph().neighbors(v).iter().all(|&w| color[w] != c) {
                color[v] = c;
                total += go(net, pos + 1, colors, color);
            }
        }
        color[v] = usize::MAX;
        total
    }
    Ok(BigUint::from(go(net, 0, colors, &mut color)))
}

/// Interpolates brute-force precoloring counts at `m, m+1, …, m+n`.
pub fn precoloring_interpolated(net: &NetworkInstance, limits: &Limits) -> Result<IntPolynomial> {
    let m = net.m();
    let n = net.n();
    let largest = ((m + n) as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    Limits::check("precoloring enumeration", largest, limits.max_states)?;
    let points: Vec<(BigRational, BigRational)> = (m..=m + n)
        .map(|colors| {
            let count = precoloring_count(net, colors, limits)?;
            Ok((
                BigRational::from_integer(BigInt::from(colors)),
                BigRational::from_integer(BigInt::from(count)),
            ))
        })
        .collect::<Result<_>>()?;
    let coefficients = lagrange(&points);
    let mut integral = Vec::with_capacity(coefficients.len());
    for c in coefficients {
        if !c.is_integer() {
            return Err(Error::Internal(format!(
                "interpolated coefficient {c} is not an integer"
            )));
        }
        integral.push(c.to_integer());
    }
    Ok(IntPolynomial::new(integral))
}

/// Ascending coefficients of the interpolating polynomial through `points`.
fn lagrange(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let mut result = vec![BigRational::zero(); points.len()];
    for (k, (xk, yk)) in points.iter().enumerate() {
        // basis numerator ∏_{j≠k} (t - x_j), scaled by y_k / ∏ (x_k - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == k {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, c) in basis.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * xj;
            }
            basis = next;
            denom *= xk - xj;
        }
        let scale = yk / denom;
        for (r, c) in result.iter_mut().zip(&basis) {
            *r += c * &scale;
        }
    }
    result
}

/// Total and bounded chamber counts from the precoloring polynomial.
pub fn chamber_counts(net: &NetworkInstance) -> Result<ChamberCounts> {
    Ok(ChamberCounts::from_characteristic(&precoloring_polynomial(net)?))
}

/// Log-concavity of the absolute coefficient sequence `a_0, a_1, …` read from
/// the leading term down to the lowest nonzero term (a factor `t^k` is
/// ignored). Every `a_r` in that range must be strictly positive.
pub fn is_log_concave(poly: &IntPolynomial) -> bool {
    if poly.is_zero() {
        return false;
    }
    let lowest = poly
        .coefficients()
        .iter()
        .position(|c| !c.is_zero())
        .unwrap_or(0);
    let a: Vec<BigInt> = poly.coefficients()[lowest..]
        .iter()
        .rev()
        .map(|c| if c < &BigInt::zero() { -c } else { c.clone() })
        .collect();
    if a.iter().any(Zero::is_zero) {
        return false;
    }
    a.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete_join, path_network, wheatstone};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn precoloring_examples() {
        assert_eq!(precoloring_polynomial(&wheatstone()).unwrap(), p(&[6, -5, 1]));
        assert_eq!(precoloring_polynomial(&path_network(4)).unwrap(), p(&[3, -3, 1]));
        // (t - 3)(t - 4) for m = 3, n = 2
        assert_eq!(precoloring_polynomial(&complete_join(3, 2)).unwrap(), p(&[12, -7, 1]));
    }

    #[test]
    fn counting_examples() {
        let limits = Limits::default();
        assert_eq!(precoloring_count(&wheatstone(), 4, &limits).unwrap(), 2u32.into());
        assert_eq!(precoloring_count(&complete_join(2, 1), 5, &limits).unwrap(), 3u32.into());
        assert_eq!(precoloring_count(&path_network(4), 2, &limits).unwrap(), 1u32.into());
        assert!(matches!(
            precoloring_count(&wheatstone(), 1, &limits),
            Err(Error::TooFewColors { .. })
        ));
        let tight = Limits {
            max_states: 10,
            ..Limits::default()
        };
        assert!(matches!(
            precoloring_count(&wheatstone(), 4, &tight),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn interpolation_examples() {
        let limits = Limits::default();
        assert_eq!(precoloring_interpolated(&wheatstone(), &limits).unwrap(), p(&[6, -5, 1]));
        assert_eq!(precoloring_interpolated(&path_network(4), &limits).unwrap(), p(&[3, -3, 1]));
        assert_eq!(precoloring_interpolated(&complete_join(2, 1), &limits).unwrap(), p(&[-2, 1]));
    }

    #[test]
    fn chamber_count_examples() {
        let c = chamber_counts(&wheatstone()).unwrap();
        assert_eq!((c.total, c.bounded), (12u32.into(), 2u32.into()));
        let c = chamber_counts(&path_network(4)).unwrap();
        assert_eq!((c.total, c.bounded), (7u32.into(), 1u32.into()));
        let c = chamber_counts(&complete_join(2, 1)).unwrap();
        assert_eq!((c.total, c.bounded), (3u32.into(), 1u32.into()));
    }

    #[test]
    fn log_concavity() {
        assert!(is_log_concave(&p(&[6, -5, 1])));
        assert!(!is_log_concave(&p(&[2, -1, 1])));
        assert!(is_log_concave(&p(&[0, 1])));
        assert!(is_log_concave(&p(&[0, -6, 11, -6, 1])));
        assert!(is_log_concave(&p(&[1])));
        assert!(!is_log_concave(&p(&[1, 0, 1])));
        assert!(!is_log_concave(&IntPolynomial::zero()));
    }
}
