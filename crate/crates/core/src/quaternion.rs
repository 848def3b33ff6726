//! Quaternions over ℚ and the hyperkähler quotient `ℍ² ⫽ U(1)` that defines
//! Eguchi-Hanson space.
//!
//! `U(1)` acts by `q_a ↦ q_a e^{it}` with moment map
//! `μ(q₁, q₂) = ½ Σ q_a i q̄_a`; Eguchi-Hanson space is `μ⁻¹(i/2)/U(1)`.
//! Its holomorphic isometries come from `SU(2)` acting on the row vector
//! `(q₁, q₂)` by right multiplication with complex 2×2 matrices, and `SO(2)`
//! acting by left multiplication with `e^{it}`.
//!
//! Group elements are rational points (`c² + s² = 1`, unit quaternions with
//! rational components), so every identity here is checked exactly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::checks::{PropertyCheck, RationalSampler};
use crate::error::{Error, Result};
use crate::rational::{frac, q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Q,
    pub x: Q,
    pub y: Q,
    pub z: Q,
}

impl Quaternion {
    pub fn new(w: Q, x: Q, y: Q, z: Q) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(q(w), q(x), q(y), q(z))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    /// `a + b·i`, a quaternion with no j or k part.
    pub fn complex(a: Q, b: Q) -> Self {
        Quaternion::new(a, b, Q::zero(), Q::zero())
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm_sq(&self) -> Q {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn scale(&self, s: &Q) -> Self {
        Quaternion::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_complex(&self) -> bool {
        self.y.is_zero() && self.z.is_zero()
    }

    pub fn imaginary(&self) -> ImQuat {
        ImQuat {
            x: self.x.clone(),
            y: self.y.clone(),
            z: self.z.clone(),
        }
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::format_rational as r;
        write!(f, "{} + {}i + {}j + {}k", r(&self.w), r(&self.x), r(&self.y), r(&self.z))
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

/// Purely imaginary quaternion, an element of `Im ℍ ≅ ℝ³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ImQuat {
    pub x: Q,
    pub y: Q,
    pub z: Q,
}

impl ImQuat {
    pub fn to_quaternion(&self) -> Quaternion {
        Quaternion::new(Q::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }
}

/// The level `ζ = i/2` defining Eguchi-Hanson space.
pub fn zeta() -> ImQuat {
    ImQuat {
        x: frac(1, 2),
        y: Q::zero(),
        z: Q::zero(),
    }
}

/// Point of `M = ℍ²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoint {
    pub q1: Quaternion,
    pub q2: Quaternion,
}

impl MPoint {
    pub fn new(q1: Quaternion, q2: Quaternion) -> Self {
        MPoint { q1, q2 }
    }

    fn map(&self, f: impl Fn(&Quaternion) -> Quaternion) -> MPoint {
        MPoint::new(f(&self.q1), f(&self.q2))
    }

    pub fn neg(&self) -> MPoint {
        self.map(|x| -x)
    }

    /// `(q₁, q₂) ↦ (q₂, q₁)`.
    pub fn swap(&self) -> MPoint {
        MPoint::new(self.q2.clone(), self.q1.clone())
    }
}

/// `e^{it} = c + s·i` with rational `c² + s² = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircleElement {
    c: Q,
    s: Q,
}

impl CircleElement {
    pub fn new(c: Q, s: Q) -> Result<Self> {
        if &c * &c + &s * &s != Q::one() {
            return Err(Error::NotOnCircle);
        }
        Ok(CircleElement { c, s })
    }

    pub fn identity() -> Self {
        CircleElement {
            c: Q::one(),
            s: Q::zero(),
        }
    }

    /// Rational parametrisation `((1−m²)/(1+m²), 2m/(1+m²))`.
    pub fn from_parameter(m: &Q) -> Self {
        let d = Q::one() + m * m;
        CircleElement {
            c: (Q::one() - m * m) / &d,
            s: (m + m) / d,
        }
    }

    pub fn c(&self) -> &Q {
        &self.c
    }

    pub fn s(&self) -> &Q {
        &self.s
    }

    pub fn negate(&self) -> Self {
        CircleElement {
            c: -&self.c,
            s: -&self.s,
        }
    }

    pub fn compose(&self, other: &CircleElement) -> Self {
        let z = &self.as_quaternion() * &other.as_quaternion();
        CircleElement { c: z.w, s: z.x }
    }

    pub fn as_quaternion(&self) -> Quaternion {
        Quaternion::complex(self.c.clone(), self.s.clone())
    }
}

/// Unit quaternion `u = z + w·j`, identified with the SU(2) matrix
/// `[[z, w], [−w̄, z̄]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SU2Element {
    u: Quaternion,
}

impl SU2Element {
    pub fn new(u: Quaternion) -> Result<Self> {
        if u.norm_sq() != Q::one() {
            return Err(Error::NotUnit);
        }
        Ok(SU2Element { u })
    }

    pub fn identity() -> Self {
        SU2Element { u: Quaternion::one() }
    }

    /// Inverse stereographic projection `v ↦ ((1 − |v|²) + 2v)/(1 + |v|²)`.
    pub fn from_parameter(v: [&Q; 3]) -> Self {
        let n = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        let d = Q::one() + &n;
        let two = q(2);
        let u = Quaternion::new(
            (Q::one() - n) / &d,
            &two * v[0] / &d,
            &two * v[1] / &d,
            &two * v[2] / &d,
        );
        SU2Element { u }
    }

    pub fn quaternion(&self) -> &Quaternion {
        &self.u
    }

    pub fn negate(&self) -> Self {
        SU2Element { u: -&self.u }
    }

    pub fn compose(&self, other: &SU2Element) -> Self {
        SU2Element { u: &self.u * &other.u }
    }

    /// Complex 2×2 matrix; entries are quaternions without j, k parts.
    pub fn matrix(&self) -> ComplexMatrix2 {
        let z = Quaternion::complex(self.u.w.clone(), self.u.x.clone());
        let w = Quaternion::complex(self.u.y.clone(), self.u.z.clone());
        ComplexMatrix2([[z.clone(), w.clone()], [-&w.conj(), z.conj()]])
    }
}

/// 2×2 matrix of complex numbers, stored as quaternions with no j, k parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexMatrix2(pub [[Quaternion; 2]; 2]);

impl ComplexMatrix2 {
    pub fn identity() -> Self {
        ComplexMatrix2([
            [Quaternion::one(), Quaternion::zero()],
            [Quaternion::zero(), Quaternion::one()],
        ])
    }

    pub fn mul(&self, o: &ComplexMatrix2) -> ComplexMatrix2 {
        let a = &self.0;
        let b = &o.0;
        ComplexMatrix2(std::array::from_fn(|i| {
            std::array::from_fn(|j| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]))
        }))
    }

    pub fn scale(&self, lam: &Quaternion) -> ComplexMatrix2 {
        ComplexMatrix2(std::array::from_fn(|i| std::array::from_fn(|j| lam * &self.0[i][j])))
    }

    pub fn neg(&self) -> ComplexMatrix2 {
        ComplexMatrix2(std::array::from_fn(|i| std::array::from_fn(|j| -&self.0[i][j])))
    }

    pub fn conj_transpose(&self) -> ComplexMatrix2 {
        ComplexMatrix2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].conj())))
    }

    pub fn det(&self) -> Quaternion {
        let a = &self.0;
        &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0])
    }

    pub fn is_unitary(&self) -> bool {
        self.mul(&self.conj_transpose()) == ComplexMatrix2::identity()
    }

    /// Right action on the row vector `(q₁, q₂)`.
    pub fn act_right(&self, p: &MPoint) -> MPoint {
        let a = &self.0;
        MPoint::new(
            &(&p.q1 * &a[0][0]) + &(&p.q2 * &a[1][0]),
            &(&p.q1 * &a[0][1]) + &(&p.q2 * &a[1][1]),
        )
    }
}

/// `μ(q₁, q₂) = ½ Σ q_a i q̄_a`.
pub fn moment_map(p: &MPoint) -> ImQuat {
    let i = Quaternion::i();
    let term = |qa: &Quaternion| &(qa * &i) * &qa.conj();
    let sum = &term(&p.q1) + &term(&p.q2);
    debug_assert!(sum.w.is_zero());
    sum.scale(&frac(1, 2)).imaginary()
}

/// Real part of `½ Σ q_a i q̄_a`, which vanishes identically.
pub fn moment_map_real_part(p: &MPoint) -> Q {
    let i = Quaternion::i();
    let term = |qa: &Quaternion| &(qa * &i) * &qa.conj();
    (&term(&p.q1) + &term(&p.q2)).w / q(2)
}

/// The U(1) action `q_a ↦ q_a e^{it}` used in the quotient.
pub fn circle_act(t: &CircleElement, p: &MPoint) -> MPoint {
    let e = t.as_quaternion();
    p.map(|qa| qa * &e)
}

/// Right action of SU(2) on the row vector `(q₁, q₂)`.
pub fn su2_right_act(u: &SU2Element, p: &MPoint) -> MPoint {
    u.matrix().act_right(p)
}

/// Left action `q_a ↦ e^{it} q_a`.
pub fn so2_left_act(t: &CircleElement, p: &MPoint) -> MPoint {
    let e = t.as_quaternion();
    p.map(|qa| &e * qa)
}

/// The map `([λ], [A]) ↦ [λA]` into U(2)/{±1}, before taking classes.
pub fn u2_image(lam: &CircleElement, a: &SU2Element) -> ComplexMatrix2 {
    a.matrix().scale(&lam.as_quaternion())
}

/// Checks that `([λ],[A]) ↦ [λA]` lands in U(2), is well defined on the
/// quotient by `(−1, −1)`, and is multiplicative on the pair itself and
/// against a fixed set of reference pairs.
pub fn u2_iso_check(lam: &CircleElement, a: &SU2Element) -> bool {
    let image = u2_image(lam, a);
    if !image.is_unitary() {
        return false;
    }
    if u2_image(&lam.negate(), &a.negate()) != image {
        return false;
    }
    let m = frac(1, 3);
    let h = frac(1, 2);
    let references = [
        (CircleElement::identity(), SU2Element::identity()),
        (CircleElement::from_parameter(&m), SU2Element::from_parameter([&h, &Q::zero(), &m])),
        (lam.clone(), a.clone()),
    ];
    references.iter().all(|(l2, a2)| u2_homomorphism(lam, a, l2, a2))
}

/// `Φ(λ₁λ₂, A₁A₂) = Φ(λ₁, A₁) Φ(λ₂, A₂)`.
pub fn u2_homomorphism(l1: &CircleElement, a1: &SU2Element, l2: &CircleElement, a2: &SU2Element) -> bool {
    u2_image(&l1.compose(l2), &a1.compose(a2)) == u2_image(l1, a1).mul(&u2_image(l2, a2))
}

/// A rational point on the level set `μ = i/2`: `(a, b·j)` with
/// `a = (t + 1/t)/2`, `b = (t − 1/t)/2`.
pub fn level_set_point(t: &Q) -> MPoint {
    let inv = Q::one() / t;
    let a = (t + &inv) / q(2);
    let b = (t - &inv) / q(2);
    MPoint::new(Quaternion::complex(a, Q::zero()), Quaternion::j().scale(&b))
}

fn sample_quaternion(s: &mut RationalSampler) -> Quaternion {
    Quaternion::new(s.rational(), s.rational(), s.rational(), s.rational())
}

fn sample_point(s: &mut RationalSampler) -> MPoint {
    MPoint::new(sample_quaternion(s), sample_quaternion(s))
}

fn sample_circle(s: &mut RationalSampler) -> CircleElement {
    CircleElement::from_parameter(&s.rational())
}

fn sample_su2(s: &mut RationalSampler) -> SU2Element {
    let (a, b, c) = (s.rational(), s.rational(), s.rational());
    SU2Element::from_parameter([&a, &b, &c])
}

fn sample_level_point(s: &mut RationalSampler) -> MPoint {
    let p = level_set_point(&s.nonzero_rational());
    let p = su2_right_act(&sample_su2(s), &p);
    so2_left_act(&sample_circle(s), &p)
}

/// The Eguchi-Hanson identity suite: moment-map invariance, level-set
/// preservation, commutation of the actions and the U(2)/{±1} map.
pub fn verify_suite(samples: usize, seed: u64) -> Vec<PropertyCheck> {
    let mut s = RationalSampler::new(seed);
    let z = zeta();
    let mut real_part_zero = true;
    let mut circle_invariance = true;
    let mut level_points = true;
    let mut left_preserves = true;
    let mut right_preserves = true;
    let mut circle_commutes = true;
    let mut actions_commute = true;
    let mut minus_one = true;
    let mut u2_map = true;
    let mut u2_injective = true;
    let mut swap_preserves = true;
    for _ in 0..samples {
        let p = sample_point(&mut s);
        let t = sample_circle(&mut s);
        let u = sample_su2(&mut s);
        let r = sample_circle(&mut s);
        real_part_zero &= moment_map_real_part(&p).is_zero();
        circle_invariance &= moment_map(&circle_act(&t, &p)) == moment_map(&p);

        let lp = sample_level_point(&mut s);
        level_points &= moment_map(&lp) == z;
        left_preserves &= moment_map(&so2_left_act(&r, &lp)) == z;
        right_preserves &= moment_map(&su2_right_act(&u, &lp)) == z;
        swap_preserves &= moment_map(&lp.swap()) == z;

        circle_commutes &= circle_act(&t, &su2_right_act(&u, &p)) == su2_right_act(&u, &circle_act(&t, &p))
            && circle_act(&t, &so2_left_act(&r, &p)) == so2_left_act(&r, &circle_act(&t, &p));
        actions_commute &= so2_left_act(&r, &su2_right_act(&u, &p)) == su2_right_act(&u, &so2_left_act(&r, &p));
        minus_one &= so2_left_act(&CircleElement::identity().negate(), &p) == p.neg()
            && su2_right_act(&SU2Element::identity().negate(), &p) == p.neg();

        let u2 = sample_su2(&mut s);
        let r2 = sample_circle(&mut s);
        u2_map &= u2_iso_check(&r, &u) && u2_homomorphism(&r, &u, &r2, &u2);
        // λA = ±1 only for (λ, A) ∈ {±(1, 1)}: kernel of the map is {±1}
        let image = u2_image(&r, &u);
        let trivial = image == ComplexMatrix2::identity() || image == ComplexMatrix2::identity().neg();
        let in_kernel = (r == CircleElement::identity() && u == SU2Element::identity())
            || (r == CircleElement::identity().negate() && u == SU2Element::identity().negate())
            || (r == CircleElement::identity() && u == SU2Element::identity().negate())
            || (r == CircleElement::identity().negate() && u == SU2Element::identity());
        u2_injective &= trivial == in_kernel;
    }
    vec![
        PropertyCheck::new("moment map has zero real part", real_part_zero, samples),
        PropertyCheck::new("moment map is U(1)-invariant", circle_invariance, samples),
        PropertyCheck::new("sampled points lie on μ = i/2", level_points, samples),
        PropertyCheck::new("left SO(2) preserves the level set", left_preserves, samples),
        PropertyCheck::new("right SU(2) preserves the level set", right_preserves, samples),
        PropertyCheck::new("coordinate swap preserves the level set", swap_preserves, samples),
        PropertyCheck::new("SO(2) and SU(2) commute with U(1)", circle_commutes, samples),
        PropertyCheck::new("left SO(2) commutes with right SU(2)", actions_commute, samples),
        PropertyCheck::new("-1 acts as p ↦ -p in SO(2) and SU(2)", minus_one, samples),
        PropertyCheck::new("([λ],[A]) ↦ [λA] is a well-defined homomorphism", u2_map, samples),
        PropertyCheck::new("kernel of (λ, A) ↦ λA is ±(1, 1) modulo signs", u2_injective, samples),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: Quaternion, b: Quaternion) -> MPoint {
        MPoint::new(a, b)
    }

    #[test]
    fn quaternion_units() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, -&Quaternion::one());
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn norm_is_multiplicative_and_conjugate_product() {
        let a = Quaternion::from_ints(1, -2, 3, 4);
        let b = Quaternion::new(frac(1, 2), q(0), frac(-3, 5), q(2));
        assert_eq!((&a * &b).norm_sq(), a.norm_sq() * b.norm_sq());
        let aa = &a * &a.conj();
        assert_eq!(aa, Quaternion::new(a.norm_sq(), q(0), q(0), q(0)));
    }

    #[test]
    fn moment_map_examples() {
        let one = Quaternion::one();
        let zero = Quaternion::zero();
        assert_eq!(moment_map(&pt(one.clone(), zero.clone())), zeta());
        let origin = moment_map(&pt(zero.clone(), zero.clone()));
        assert!(origin.x.is_zero() && origin.y.is_zero() && origin.z.is_zero());
        let m = moment_map(&pt(Quaternion::j(), zero));
        assert_eq!(m, ImQuat { x: frac(-1, 2), y: q(0), z: q(0) });
    }

    #[test]
    fn circle_examples() {
        let p = pt(Quaternion::one(), Quaternion::zero());
        assert_eq!(circle_act(&CircleElement::identity(), &p), p);
        let quarter = CircleElement::new(q(0), q(1)).unwrap();
        assert_eq!(circle_act(&quarter, &p), pt(Quaternion::i(), Quaternion::zero()));
        assert!(CircleElement::new(q(1), q(1)).is_err());
        let t = CircleElement::from_parameter(&frac(2, 7));
        assert!(CircleElement::new(t.c().clone(), t.s().clone()).is_ok());
    }

    #[test]
    fn su2_matrix_is_a_homomorphism() {
        let a = SU2Element::from_parameter([&frac(1, 2), &q(1), &frac(-1, 3)]);
        let b = SU2Element::from_parameter([&q(0), &frac(2, 5), &q(3)]);
        assert_eq!(a.compose(&b).matrix(), a.matrix().mul(&b.matrix()));
        assert!(a.matrix().is_unitary());
        assert_eq!(a.matrix().det(), Quaternion::one());
        assert!(SU2Element::new(Quaternion::from_ints(1, 1, 0, 0)).is_err());
    }

    #[test]
    fn su2_and_so2_identities_fix_points() {
        let p = pt(Quaternion::from_ints(1, 2, 0, -1), Quaternion::from_ints(0, 3, 1, 1));
        assert_eq!(su2_right_act(&SU2Element::identity(), &p), p);
        assert_eq!(so2_left_act(&CircleElement::identity(), &p), p);
    }

    #[test]
    fn j_unit_preserves_level_set_at_base_point() {
        let p = pt(Quaternion::one(), Quaternion::zero());
        assert_eq!(moment_map(&p), zeta());
        let u = SU2Element::new(Quaternion::j()).unwrap();
        let moved = su2_right_act(&u, &p);
        assert_eq!(moved, pt(Quaternion::zero(), Quaternion::one()));
        assert_eq!(moment_map(&moved), zeta());
    }

    #[test]
    fn coordinatewise_right_multiplication_would_leave_level_set() {
        // q_a ↦ q_a·j sends μ = i/2 to −i/2, which is why SU(2) acts via its matrix.
        let p = pt(Quaternion::one(), Quaternion::zero());
        let naive = p.map(|x| x * &Quaternion::j());
        assert_eq!(moment_map(&naive), ImQuat { x: frac(-1, 2), y: q(0), z: q(0) });
    }

    #[test]
    fn u2_examples() {
        assert!(u2_iso_check(&CircleElement::identity(), &SU2Element::identity()));
        let lam = CircleElement::new(q(0), q(1)).unwrap();
        let a = SU2Element::new(Quaternion::i()).unwrap();
        assert_eq!(u2_image(&lam, &a), u2_image(&lam.negate(), &a.negate()));
        assert!(u2_iso_check(&lam, &a));
    }

    #[test]
    fn level_set_points() {
        for t in [q(1), q(2), frac(-3, 5)] {
            assert_eq!(moment_map(&level_set_point(&t)), zeta());
        }
    }

    #[test]
    fn suite_passes() {
        let checks = verify_suite(50, 7);
        for c in &checks {
            assert!(c.passed, "{}", c.name);
        }
    }
}
