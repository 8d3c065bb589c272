//! Exact characteristic polynomials and integer spectra.
//!
//! The polynomial is computed with Berkowitz's division-free recurrence over
//! big integers, so no rounding happens anywhere. Only integer roots are
//! extracted; anything left over is reported as a residual factor.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::toeplitz::build_family;

pub const DEFAULT_SPECTRAL_CAP: usize = 64;

/// Monic integer polynomial; `coeffs[i]` multiplies `x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_ascending(coeffs: Vec<BigInt>) -> Self {
        assert!(coeffs.last().is_some_and(|c| c.is_one()), "polynomial must be monic");
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// `det(xI - A)` of the adjacency matrix.
pub fn char_poly(g: &Graph) -> Result<CharPoly> {
    char_poly_with_cap(g, DEFAULT_SPECTRAL_CAP)
}

pub fn char_poly_with_cap(g: &Graph, cap: usize) -> Result<CharPoly> {
    let m = g.order();
    if m > cap {
        return Err(Error::CapExceeded { what: "char_poly", cap, order: m });
    }
    let a: Vec<Vec<i64>> = (0..m)
        .map(|u| (0..m).map(|v| g.has_edge(u, v) as i64).collect())
        .collect();
    Ok(berkowitz(&a))
}

/// Berkowitz over the trailing principal submatrices `A[i.., i..]`.
pub fn berkowitz(a: &[Vec<i64>]) -> CharPoly {
    let n = a.len();
    // descending coefficients of the current trailing block's polynomial
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for i in (0..n).rev() {
        let k = n - i;
        // column C = A[i+1.., i]; repeatedly multiplied by the block M = A[i+1.., i+1..]
        let mut col: Vec<BigInt> = (i + 1..n).map(|r| BigInt::from(a[r][i])).collect();
        let mut toeplitz = Vec::with_capacity(k + 1);
        toeplitz.push(BigInt::one());
        toeplitz.push(BigInt::from(-a[i][i]));
        for step in 0..k - 1 {
            let rc: BigInt = (i + 1..n)
                .zip(&col)
                .map(|(c, x)| x * a[i][c])
                .sum();
            toeplitz.push(-rc);
            if step + 2 < k {
                col = (i + 1..n)
                    .map(|r| (i + 1..n).zip(&col).map(|(c, x)| x * a[r][c]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); k + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            for (l, p) in poly.iter().enumerate().take(j + 1) {
                *slot += &toeplitz[j - l] * p;
            }
        }
        poly = next;
    }
    poly.reverse();
    CharPoly { coeffs: poly }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Eigenvalue {
    pub value: i64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    /// Integer roots, largest first.
    pub roots: Vec<Eigenvalue>,
    /// True iff every root is an integer.
    pub integral: bool,
    /// Degree of the factor with no integer roots left after deflation.
    pub residual_degree: usize,
}

impl Spectrum {
    pub fn multiplicity_sum(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// `Σ λ^k` over the integer roots, with multiplicity.
    pub fn power_sum(&self, k: u32) -> BigInt {
        self.roots
            .iter()
            .map(|r| BigInt::from(r.value).pow(k) * r.multiplicity)
            .sum()
    }

    pub fn multiplicity_of(&self, value: i64) -> usize {
        self.roots
            .iter()
            .find(|r| r.value == value)
            .map_or(0, |r| r.multiplicity)
    }
}

/// Divides by `x - root` if it is a root; descending-coefficient synthetic division.
fn deflate(desc: &[BigInt], root: &BigInt) -> Option<Vec<BigInt>> {
    let mut out = Vec::with_capacity(desc.len() - 1);
    let mut acc = BigInt::zero();
    for c in desc {
        acc = acc * root + c;
        out.push(acc.clone());
    }
    let rem = out.pop().unwrap();
    rem.is_zero().then_some(out)
}

/// Fujiwara's bound `2 max |a_{d-i}|^{1/i}` on root magnitudes, rounded up.
fn root_bound(desc: &[BigInt]) -> BigInt {
    let mut best = BigInt::zero();
    for (i, c) in desc.iter().enumerate().skip(1) {
        let c = c.abs();
        let mut r = c.nth_root(i as u32);
        if r.pow(i as u32) < c {
            r += 1;
        }
        if i == desc.len() - 1 {
            // the constant term enters as |a_0 / 2|
            let half = (&c + 1u32) / 2u32;
            let mut h = half.nth_root(i as u32);
            if h.pow(i as u32) < half {
                h += 1;
            }
            r = h;
        }
        best = best.max(r);
    }
    best * 2
}

/// Extracts every integer root of a monic integer polynomial with multiplicity.
pub fn integer_spectrum(p: &CharPoly) -> Spectrum {
    let mut desc: Vec<BigInt> = p.coeffs.iter().rev().cloned().collect();
    let mut found: Vec<Eigenvalue> = Vec::new();
    let push = |value: i64, found: &mut Vec<Eigenvalue>| {
        match found.iter_mut().find(|e| e.value == value) {
            Some(e) => e.multiplicity += 1,
            None => found.push(Eigenvalue { value, multiplicity: 1 }),
        }
    };

    while desc.len() > 1 && desc.last().unwrap().is_zero() {
        desc.pop();
        push(0, &mut found);
    }
    let mut d = BigInt::one();
    while desc.len() > 1 {
        let constant = desc.last().unwrap().abs();
        if d > constant || d > root_bound(&desc) {
            break;
        }
        if (&constant % &d).is_zero() {
            for cand in [d.clone(), -d.clone()] {
                while desc.len() > 1 {
                    match deflate(&desc, &cand) {
                        Some(q) => {
                            desc = q;
                            push(cand.to_i64().expect("integer root fits in i64"), &mut found);
                        }
                        None => break,
                    }
                }
            }
        }
        d += 1;
    }
    found.sort_by_key(|r| std::cmp::Reverse(r.value));
    let residual_degree = desc.len() - 1;
    Spectrum { roots: found, integral: residual_degree == 0, residual_degree }
}

/// True iff `T_2n(W)` has spectrum `{n+1, 1-n, 1^(n-2), -1^(n)}`.
pub fn verify_family_spectrum(n: usize) -> Result<bool> {
    let g = build_family(n)?;
    let spectrum = integer_spectrum(&char_poly(&g)?);
    Ok(spectrum == family_spectrum(n))
}

/// The closed form, in the same shape [`integer_spectrum`] returns.
pub fn family_spectrum(n: usize) -> Spectrum {
    let n_i = n as i64;
    let mut roots = vec![
        Eigenvalue { value: n_i + 1, multiplicity: 1 },
        Eigenvalue { value: 1, multiplicity: n - 2 },
        Eigenvalue { value: -1, multiplicity: n },
        Eigenvalue { value: 1 - n_i, multiplicity: 1 },
    ];
    roots.retain(|r| r.multiplicity > 0);
    Spectrum { roots, integral: true, residual_degree: 0 }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub order: usize,
    /// Decimal strings, leading coefficient first.
    pub char_poly_coefficients: Vec<String>,
    pub roots: Vec<Eigenvalue>,
    pub integral: bool,
    pub residual_degree: usize,
}

pub fn spectrum_report(g: &Graph) -> Result<SpectrumReport> {
    let p = char_poly(g)?;
    let s = integer_spectrum(&p);
    Ok(SpectrumReport {
        order: g.order(),
        char_poly_coefficients: p.coeffs.iter().rev().map(|c| c.to_string()).collect(),
        roots: s.roots,
        integral: s.integral,
        residual_degree: s.residual_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &CharPoly) -> Vec<i64> {
        p.coefficients().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(ints(&char_poly(&Graph::complete(2).unwrap()).unwrap()), vec![-1, 0, 1]);
        // C_4: x^4 - 4x^2
        assert_eq!(ints(&char_poly(&Graph::cycle(4).unwrap()).unwrap()), vec![0, 0, -4, 0, 1]);
        // single vertex: x
        assert_eq!(ints(&char_poly(&Graph::from_edges(1, []).unwrap()).unwrap()), vec![0, 1]);
    }

    #[test]
    fn t8_spectrum() {
        let s = integer_spectrum(&char_poly(&build_family(4).unwrap()).unwrap());
        assert_eq!(s, family_spectrum(4));
        assert_eq!(s.multiplicity_of(-1), 4);
        assert_eq!(s.multiplicity_of(1), 2);
    }

    #[test]
    fn c5_is_not_integral() {
        let s = integer_spectrum(&char_poly(&Graph::cycle(5).unwrap()).unwrap());
        assert!(!s.integral);
        assert_eq!(s.roots, vec![Eigenvalue { value: 2, multiplicity: 1 }]);
        assert_eq!(s.residual_degree, 4);
    }

    #[test]
    fn zero_roots_and_repeated_roots() {
        // x^3 (x - 3)^2 (x + 2) expanded: x^6 - 4x^5 - 3x^4 + 18x^3
        let p = CharPoly::from_ascending([0, 0, 0, 18, -3, -4, 1].map(BigInt::from).to_vec());
        let s = integer_spectrum(&p);
        assert!(s.integral);
        assert_eq!(s.multiplicity_of(0), 3);
        assert_eq!(s.multiplicity_of(3), 2);
        assert_eq!(s.multiplicity_of(-2), 1);
    }

    #[test]
    fn family_closed_form_trace_is_zero() {
        for n in [4, 6, 8, 10, 12] {
            assert_eq!(family_spectrum(n).power_sum(1), BigInt::zero());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::cycle(10).unwrap();
        assert!(matches!(char_poly_with_cap(&g, 8), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn report_lists_leading_coefficient_first() {
        let r = spectrum_report(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(r.char_poly_coefficients, vec!["1", "0", "-1"]);
        assert!(r.integral);
    }
}
