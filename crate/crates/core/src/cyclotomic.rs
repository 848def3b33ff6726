//! Exact arithmetic in the cyclotomic field ℚ(ζₙ) = ℚ[x]/Φₙ(x).

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, q, Q};

/// Dense polynomial over ℚ, lowest degree first, no trailing zeros.
type Poly = Vec<Q>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn poly_divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().expect("nonzero divisor");
    let mut quot = vec![Q::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") / lead;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        quot[shift] = c;
        trim(&mut r);
    }
    trim(&mut quot);
    (quot, r)
}

/// Φₙ, computed as (xⁿ − 1) / ∏_{d | n, d < n} Φ_d.
pub fn cyclotomic_polynomial(n: usize) -> Vec<Q> {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut p: Poly = vec![Q::zero(); n + 1];
    p[0] = q(-1);
    p[n] = Q::one();
    for d in (1..n).filter(|&d| n.is_multiple_of(d)) {
        p = poly_divmod(&p, &cyclotomic_polynomial(d)).0;
    }
    p
}

/// An element of ℚ(ζₙ), reduced modulo Φₙ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    n: usize,
    coeffs: Poly,
}

impl Cyclotomic {
    fn reduced(n: usize, p: Poly) -> Self {
        let (_, r) = poly_divmod(&p, &cyclotomic_polynomial(n));
        Cyclotomic { n, coeffs: r }
    }

    pub fn rational(n: usize, c: Q) -> Self {
        Self::reduced(n, vec![c])
    }

    pub fn zero(n: usize) -> Self {
        Cyclotomic { n, coeffs: Vec::new() }
    }

    /// ζₙᵐ for any integer m.
    pub fn zeta_pow(n: usize, m: i64) -> Self {
        let e = m.rem_euclid(n as i64) as usize;
        let mut p = vec![Q::zero(); e + 1];
        p[e] = Q::one();
        Self::reduced(n, p)
    }

    /// 2 cos(2πm/n) = ζᵐ + ζ⁻ᵐ.
    pub fn two_cos(n: usize, m: i64) -> Self {
        Self::zeta_pow(n, m).add(&Self::zeta_pow(n, -m))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The value if it lies in ℚ.
    pub fn to_rational(&self) -> Option<Q> {
        match self.coeffs.len() {
            0 => Some(Q::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn same_field(&self, other: &Cyclotomic) {
        assert_eq!(self.n, other.n, "elements of different cyclotomic fields");
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        self.same_field(other);
        let neg: Poly = other.coeffs.iter().map(|c| -c).collect();
        Cyclotomic {
            n: self.n,
            coeffs: poly_sub(&self.coeffs, &neg),
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.same_field(other);
        Cyclotomic {
            n: self.n,
            coeffs: poly_sub(&self.coeffs, &other.coeffs),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        self.same_field(other);
        Self::reduced(self.n, poly_mul(&self.coeffs, &other.coeffs))
    }

    pub fn scale(&self, c: &Q) -> Cyclotomic {
        let mut coeffs: Poly = self.coeffs.iter().map(|x| x * c).collect();
        trim(&mut coeffs);
        Cyclotomic { n: self.n, coeffs }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φₙ.
    pub fn inverse(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::Rejected("division by zero in a cyclotomic field".into()));
        }
        // invariant: s·self ≡ r (mod Φₙ)
        let (mut r0, mut r1) = (cyclotomic_polynomial(self.n), self.coeffs.clone());
        let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Q::one()]);
        while r1.len() > 1 {
            let (quot, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c = r1.first().expect("Φₙ is irreducible, so the gcd is a nonzero constant");
        let inv: Poly = s1.iter().map(|x| x / c).collect();
        Ok(Self::reduced(self.n, inv))
    }

    pub fn div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Value under ζₙ ↦ e^{2πi/n}, as (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / self.n as f64;
            let c = c.to_f64().unwrap_or(f64::NAN);
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }

    /// Same number viewed in ℚ(ζₘ) for a multiple `m` of the order.
    pub fn lift(&self, m: usize) -> Result<Cyclotomic> {
        if !m.is_multiple_of(self.n) {
            return Err(Error::Rejected(format!("ℚ(ζ{}) does not embed in ℚ(ζ{m})", self.n)));
        }
        let step = m / self.n;
        let mut p = vec![Q::zero(); self.coeffs.len().saturating_sub(1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[k * step] = c.clone();
        }
        trim(&mut p);
        Ok(Self::reduced(m, p))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format_rational(c),
                1 => format!("{}·ζ{}", format_rational(c), self.n),
                _ => format!("{}·ζ{}^{k}", format_rational(c), self.n),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
