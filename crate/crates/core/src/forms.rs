//! Exact exterior algebra on ℝ⁷ and the flat G₂-structure.
//!
//! Basis k-forms `dx_{i₁…i_k}` (with `i₁ < … < i_k`, indices 1..=7) are
//! stored internally as 7-bit masks; a [`KForm`] keeps one rational
//! coefficient per basis element in lexicographic order of the index tuple.
//! The metric is `g₀ = dx₁² + … + dx₇²` and `dx_{1234567}` is the positive
//! volume form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::checks::{PropertyCheck, RationalSampler};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, Q};

pub const DIM: usize = 7;

struct BasisTables {
    /// `masks[k]` lists the degree-k basis masks in lexicographic tuple order.
    masks: Vec<Vec<u8>>,
    /// Position of a mask within its degree's list.
    position: [usize; 128],
}

fn tables() -> &'static BasisTables {
    static TABLES: OnceLock<BasisTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut masks = vec![Vec::new(); DIM + 1];
        let mut position = [0usize; 128];
        for k in 0..=DIM {
            let mut list: Vec<u8> = (0u8..128).filter(|m| m.count_ones() as usize == k).collect();
            list.sort_by_key(|&m| mask_indices(m));
            for (i, &m) in list.iter().enumerate() {
                position[m as usize] = i;
            }
            masks[k] = list;
        }
        BasisTables { masks, position }
    })
}

/// 1-based indices of a basis mask, increasing.
pub fn mask_indices(mask: u8) -> Vec<usize> {
    (0..DIM).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn indices_mask(indices: &[usize]) -> Result<u8> {
    let ok = indices.windows(2).all(|w| w[0] < w[1]) && indices.iter().all(|&i| (1..=DIM).contains(&i));
    if !ok {
        return Err(Error::InvalidIndices(indices.to_vec()));
    }
    Ok(indices.iter().fold(0u8, |m, &i| m | 1 << (i - 1)))
}

/// Sign of `dx_A ∧ dx_B` relative to `dx_{A∪B}` (A and B disjoint).
fn wedge_sign(a: u8, b: u8) -> bool {
    // count pairs (i ∈ A, j ∈ B) with i > j
    let mut inversions = 0;
    for j in 0..DIM {
        if b >> j & 1 == 1 {
            inversions += (a >> (j + 1)).count_ones();
        }
    }
    inversions % 2 == 1
}

/// Number of basis k-forms, C(7, k).
pub fn basis_len(k: usize) -> usize {
    tables().masks[k].len()
}

/// Degree-k antisymmetric tensor with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KForm {
    degree: usize,
    coeffs: Vec<Q>,
}

impl KForm {
    pub fn zero(degree: usize) -> Result<Self> {
        if degree > DIM {
            return Err(Error::InvalidDegree(degree));
        }
        Ok(KForm {
            degree,
            coeffs: vec![Q::zero(); basis_len(degree)],
        })
    }

    /// The constant 0-form `c`.
    pub fn scalar(c: Q) -> Self {
        KForm {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// Basis form `dx_{i₁…i_k}`; indices must be strictly increasing in 1..=7.
    pub fn dx(indices: &[usize]) -> Result<Self> {
        let mask = indices_mask(indices)?;
        let mut f = KForm::zero(indices.len())?;
        f.coeffs[tables().position[mask as usize]] = Q::one();
        Ok(f)
    }

    /// Sum of `c · dx_I` over the given terms, all of the same degree.
    pub fn from_terms(degree: usize, terms: &[(&[usize], Q)]) -> Result<Self> {
        let mut f = KForm::zero(degree)?;
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::InvalidIndices(idx.to_vec()));
            }
            let mask = indices_mask(idx)?;
            f.coeffs[tables().position[mask as usize]] += c;
        }
        Ok(f)
    }

    /// Integer-coefficient shorthand for [`KForm::from_terms`].
    pub fn from_int_terms(degree: usize, terms: &[(&[usize], i64)]) -> Result<Self> {
        let t: Vec<(&[usize], Q)> = terms.iter().map(|(i, c)| (*i, q(*c))).collect();
        Self::from_terms(degree, &t)
    }

    /// The positive volume form `dx_{1234567}`.
    pub fn volume() -> Self {
        KForm::scalar(Q::one()).star()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, indices: &[usize]) -> Q {
        match indices_mask(indices) {
            Ok(m) if indices.len() == self.degree => self.coeffs[tables().position[m as usize]].clone(),
            _ => Q::zero(),
        }
    }

    fn coeff_mask(&self, mask: u8) -> &Q {
        &self.coeffs[tables().position[mask as usize]]
    }

    fn masked_terms(&self) -> impl Iterator<Item = (u8, &Q)> + '_ {
        tables().masks[self.degree]
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&m, c)| (m, c))
    }

    /// Nonzero terms as (index tuple, coefficient) in basis order.
    pub fn terms(&self) -> Vec<(Vec<usize>, Q)> {
        self.masked_terms().map(|(m, c)| (mask_indices(m), c.clone())).collect()
    }

    /// Coefficient vector in basis order.
    pub fn coefficients(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn from_coefficients(degree: usize, coeffs: Vec<Q>) -> Result<Self> {
        if degree > DIM {
            return Err(Error::InvalidDegree(degree));
        }
        if coeffs.len() != basis_len(degree) {
            return Err(Error::Rejected(format!(
                "expected {} coefficients for degree {degree}, got {}",
                basis_len(degree),
                coeffs.len()
            )));
        }
        Ok(KForm { degree, coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, s: &Q) -> KForm {
        KForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn wedge(&self, other: &KForm) -> Result<KForm> {
        wedge(self, other)
    }

    pub fn star(&self) -> KForm {
        hodge_star(self)
    }

    /// True iff every nonzero term only involves the given coordinates.
    pub fn supported_on(&self, coords: &[usize]) -> bool {
        let allowed = coords.iter().fold(0u8, |m, &i| m | 1 << (i - 1));
        self.masked_terms().all(|(m, _)| m & !allowed == 0)
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in terms.iter().enumerate() {
            let neg = c < &Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() || idx.is_empty() {
                write!(f, "{}", crate::rational::format_rational(&mag))?;
                if !idx.is_empty() {
                    write!(f, "·")?;
                }
            }
            if !idx.is_empty() {
                let s: String = idx.iter().map(|i| i.to_string()).collect();
                write!(f, "dx{s}")?;
            }
        }
        Ok(())
    }
}

impl Add for &KForm {
    type Output = KForm;
    fn add(self, rhs: &KForm) -> KForm {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        KForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &KForm {
    type Output = KForm;
    fn sub(self, rhs: &KForm) -> KForm {
        assert_eq!(self.degree, rhs.degree, "subtracting forms of different degree");
        KForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        KForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&KForm> for &Q {
    type Output = KForm;
    fn mul(self, rhs: &KForm) -> KForm {
        rhs.scale(self)
    }
}

/// Exterior product.
pub fn wedge(a: &KForm, b: &KForm) -> Result<KForm> {
    let degree = a.degree + b.degree;
    if degree > DIM {
        return Err(Error::DegreeOverflow(a.degree, b.degree));
    }
    let mut out = KForm::zero(degree)?;
    let pos = &tables().position;
    for (ma, ca) in a.masked_terms() {
        for (mb, cb) in b.masked_terms() {
            if ma & mb != 0 {
                continue;
            }
            let prod = ca * cb;
            let slot = &mut out.coeffs[pos[(ma | mb) as usize]];
            if wedge_sign(ma, mb) {
                *slot -= prod;
            } else {
                *slot += prod;
            }
        }
    }
    Ok(out)
}

/// Hodge star for `g₀` and the orientation `dx_{1234567}`:
/// `*dx_I = sign(I, Iᶜ) · dx_{Iᶜ}`.
pub fn hodge_star(a: &KForm) -> KForm {
    let mut out = KForm::zero(DIM - a.degree).expect("complementary degree");
    let pos = &tables().position;
    for (m, c) in a.masked_terms() {
        let comp = !m & 0x7f;
        let slot = &mut out.coeffs[pos[comp as usize]];
        if wedge_sign(m, comp) {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    out
}

/// Inner product induced by `g₀`: basis forms are orthonormal.
pub fn inner(a: &KForm, b: &KForm) -> Q {
    if a.degree != b.degree {
        return Q::zero();
    }
    a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x * y).sum()
}

/// Vector in ℝ⁷ with exact components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector7(pub [Q; 7]);

impl Vector7 {
    pub fn zero() -> Self {
        Vector7(std::array::from_fn(|_| Q::zero()))
    }

    /// Standard basis vector `e_i`, `i` in 1..=7.
    pub fn e(i: usize) -> Self {
        assert!((1..=DIM).contains(&i), "basis index out of range");
        let mut v = Self::zero();
        v.0[i - 1] = Q::one();
        v
    }

    pub fn from_ints(xs: [i64; 7]) -> Self {
        Vector7(xs.map(q))
    }

    pub fn dot(&self, other: &Vector7) -> Q {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> Q {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Q) -> Vector7 {
        Vector7(std::array::from_fn(|i| &self.0[i] * s))
    }
}

impl Add for &Vector7 {
    type Output = Vector7;
    fn add(self, rhs: &Vector7) -> Vector7 {
        Vector7(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &Vector7 {
    type Output = Vector7;
    fn sub(self, rhs: &Vector7) -> Vector7 {
        Vector7(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

/// General 7×7 rational matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap7(pub [[Q; 7]; 7]);

impl LinearMap7 {
    pub fn identity() -> Self {
        Self::diag_ints([1; 7])
    }

    pub fn diag_ints(d: [i64; 7]) -> Self {
        LinearMap7(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { q(d[i]) } else { Q::zero() })
        }))
    }

    pub fn scalar(s: &Q) -> Self {
        LinearMap7(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { s.clone() } else { Q::zero() })
        }))
    }

    pub fn entry(&self, i: usize, j: usize) -> &Q {
        &self.0[i][j]
    }

    pub fn apply(&self, v: &Vector7) -> Vector7 {
        Vector7(std::array::from_fn(|i| {
            self.0[i].iter().zip(&v.0).map(|(a, b)| a * b).sum()
        }))
    }

    pub fn compose(&self, other: &LinearMap7) -> LinearMap7 {
        LinearMap7(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..DIM).map(|k| &self.0[i][k] * &other.0[k][j]).sum())
        }))
    }
}

/// Interior product `i(u)a`.
pub fn interior(u: &Vector7, a: &KForm) -> Result<KForm> {
    if a.degree == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let mut out = KForm::zero(a.degree - 1)?;
    let pos = &tables().position;
    for (m, c) in a.masked_terms() {
        // i(e_k) dx_I = (-1)^(position of k in I) dx_{I∖k}
        for k in 0..DIM {
            if m >> k & 1 == 0 || u.0[k].is_zero() {
                continue;
            }
            let before = (m & ((1u8 << k) - 1)).count_ones();
            let term = c * &u.0[k];
            let slot = &mut out.coeffs[pos[(m & !(1 << k)) as usize]];
            if before % 2 == 1 {
                *slot -= term;
            } else {
                *slot += term;
            }
        }
    }
    Ok(out)
}

/// `a(v₁, …, v_k)`.
pub fn evaluate(a: &KForm, vectors: &[Vector7]) -> Result<Q> {
    if vectors.len() != a.degree {
        return Err(Error::Rejected(format!(
            "{}-form evaluated on {} vectors",
            a.degree,
            vectors.len()
        )));
    }
    let mut cur = a.clone();
    for v in vectors {
        cur = interior(v, &cur)?;
    }
    Ok(cur.coeffs[0].clone())
}

/// `(m*a)(v₁,…,v_k) = a(m v₁,…,m v_k)`.
pub fn pullback(m: &LinearMap7, a: &KForm) -> KForm {
    // m*dx_i = Σ_j m_ij dx_j
    let rows: Vec<KForm> = (0..DIM)
        .map(|i| {
            let coeffs: Vec<Q> = (0..DIM).map(|j| m.0[i][j].clone()).collect();
            KForm::from_coefficients(1, coeffs).expect("degree one")
        })
        .collect();
    let mut out = KForm::zero(a.degree).expect("same degree");
    for (mask, c) in a.masked_terms() {
        let mut term = KForm::scalar(c.clone());
        for i in 0..DIM {
            if mask >> i & 1 == 1 {
                term = wedge(&term, &rows[i]).expect("degree bounded by input");
                if term.is_zero() {
                    break;
                }
            }
        }
        out = &out + &term;
    }
    out
}

/// Pullback by a matrix with exactly one nonzero entry `±1` per row,
/// given as `row i ↦ (column, negated)`. Exact, without rational products.
pub fn pullback_signed(images: &[(usize, bool); 7], a: &KForm) -> KForm {
    let mut out = KForm::zero(a.degree).expect("same degree");
    let pos = &tables().position;
    for (mask, c) in a.masked_terms() {
        // m*dx_I = ±dx_{π(i₁)} ∧ … ; reorder the image indices into increasing order
        let mut image = 0u8;
        let mut negate = false;
        let mut collision = false;
        for i in 0..DIM {
            if mask >> i & 1 == 1 {
                let (j, neg) = images[i];
                if image >> j & 1 == 1 {
                    collision = true;
                    break;
                }
                negate ^= neg;
                // appending dx_j after the current product: sign from larger indices already present
                negate ^= (image >> (j + 1)).count_ones() % 2 == 1;
                image |= 1 << j;
            }
        }
        if collision {
            continue;
        }
        let slot = &mut out.coeffs[pos[image as usize]];
        if negate {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    out
}

/// The standard G₂ 3-form
/// `φ₀ = dx123 + dx145 + dx167 + dx246 − dx257 − dx347 − dx356`.
pub fn standard_phi() -> KForm {
    static PHI: OnceLock<KForm> = OnceLock::new();
    PHI.get_or_init(|| {
        KForm::from_int_terms(
            3,
            &[
                (&[1, 2, 3], 1),
                (&[1, 4, 5], 1),
                (&[1, 6, 7], 1),
                (&[2, 4, 6], 1),
                (&[2, 5, 7], -1),
                (&[3, 4, 7], -1),
                (&[3, 5, 6], -1),
            ],
        )
        .expect("valid basis")
    })
    .clone()
}

/// `ψ = *φ₀`.
pub fn standard_psi() -> KForm {
    hodge_star(&standard_phi())
}

/// The cross product determined by `φ₀(u, v, w) = g₀(u × v, w)`.
pub fn cross_product(u: &Vector7, v: &Vector7) -> Vector7 {
    let one_form = interior(v, &interior(u, &standard_phi()).expect("degree 3")).expect("degree 2");
    Vector7(std::array::from_fn(|i| one_form.coeffs[i].clone()))
}

/// Splits a 2-form into its Λ²₇ and Λ²₁₄ parts.
///
/// `p7 = (a + *(a∧φ₀))/3`, `p14 = a − p7`; then `*(p7∧φ₀) = 2·p7` and
/// `*(p14∧φ₀) = −p14`.
pub fn project_2forms(a: &KForm) -> Result<(KForm, KForm)> {
    if a.degree != 2 {
        return Err(Error::InvalidDegree(a.degree));
    }
    let image = hodge_star(&wedge(a, &standard_phi())?);
    let p7 = (&image + a).scale(&Q::new(1.into(), 3.into()));
    let p14 = a - &p7;
    Ok((p7, p14))
}

/// Splits a 3-form into its Λ³₁, Λ³₇ and Λ³₂₇ parts.
pub fn project_3forms(a: &KForm) -> Result<(KForm, KForm, KForm)> {
    if a.degree != 3 {
        return Err(Error::InvalidDegree(a.degree));
    }
    let phi = standard_phi();
    let p1 = phi.scale(&(inner(a, &phi) / inner(&phi, &phi)));

    // Λ³₇ = { i(u)ψ }: solve the 7×7 Gram system for the coefficients of u.
    let psi = standard_psi();
    let spanning: Vec<KForm> = (1..=DIM)
        .map(|k| interior(&Vector7::e(k), &psi).expect("degree 4"))
        .collect();
    let gram = Matrix::from_rows(
        spanning
            .iter()
            .map(|x| spanning.iter().map(|y| inner(x, y)).collect())
            .collect(),
    );
    let rhs: Vec<Q> = spanning.iter().map(|x| inner(a, x)).collect();
    let u = gram
        .solve(&rhs)
        .ok_or_else(|| Error::Consistency("Λ³₇ spanning set is degenerate".into()))?;
    let mut p7 = KForm::zero(3)?;
    for (c, x) in u.iter().zip(&spanning) {
        p7 = &p7 + &x.scale(c);
    }
    let p27 = &(a - &p1) - &p7;
    Ok((p1, p7, p27))
}

/// Rank of a linear endomorphism of Λᵏ, given by its action on forms.
pub fn operator_rank(degree: usize, op: impl Fn(&KForm) -> KForm) -> usize {
    let n = basis_len(degree);
    let mut m = Matrix::zeros(n, n);
    for (col, &mask) in tables().masks[degree].iter().enumerate() {
        let mut e = KForm::zero(degree).expect("valid degree");
        e.coeffs[tables().position[mask as usize]] = Q::one();
        let image = op(&e);
        for (row, c) in image.coeffs.iter().enumerate() {
            m[(row, col)] = c.clone();
        }
    }
    m.rank()
}

/// Dimensions of the G₂-type components of Λ² and Λ³, computed as ranks of
/// the projection operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ComponentDimensions {
    pub two: (usize, usize),
    pub three: (usize, usize, usize),
}

pub fn component_dimensions() -> ComponentDimensions {
    let r2 = |f: fn((KForm, KForm)) -> KForm| operator_rank(2, |a| f(project_2forms(a).expect("degree 2")));
    let r3 = |f: fn((KForm, KForm, KForm)) -> KForm| {
        operator_rank(3, |a| f(project_3forms(a).expect("degree 3")))
    };
    ComponentDimensions {
        two: (r2(|p| p.0), r2(|p| p.1)),
        three: (r3(|p| p.0), r3(|p| p.1), r3(|p| p.2)),
    }
}

/// True iff `m*φ₀ = φ₀` exactly.
pub fn preserves_phi(m: &LinearMap7) -> bool {
    pullback(m, &standard_phi()) == standard_phi()
}

/// Three symplectic 2-forms on a 4-dimensional coordinate block with
/// `ωᵢ ∧ ωⱼ = 2 δᵢⱼ vol_block`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperkahlerTriple {
    omega: [KForm; 3],
    block: [usize; 4],
}

fn one_form(i: usize) -> KForm {
    KForm::dx(&[i]).expect("index in range")
}

fn product_of(indices: &[usize]) -> KForm {
    indices
        .iter()
        .fold(KForm::scalar(Q::one()), |acc, &i| wedge(&acc, &one_form(i)).expect("distinct indices"))
}

impl HyperkahlerTriple {
    pub fn new(omega: [KForm; 3], block: [usize; 4]) -> Result<Self> {
        let mut sorted = block;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.iter().any(|&i| !(1..=DIM).contains(&i)) {
            return Err(Error::InvalidIndices(block.to_vec()));
        }
        let triple = HyperkahlerTriple { omega, block };
        for (i, w) in triple.omega.iter().enumerate() {
            if w.degree() != 2 || !w.supported_on(&block) {
                return Err(Error::InvalidTriple(format!("ω{} is not a 2-form on the block", i + 1)));
            }
        }
        let two_vol = triple.volume().scale(&q(2));
        for i in 0..3 {
            for j in 0..3 {
                let w = wedge(&triple.omega[i], &triple.omega[j])?;
                let expected = if i == j { two_vol.clone() } else { KForm::zero(4)? };
                if w != expected {
                    return Err(Error::InvalidTriple(format!(
                        "ω{}∧ω{} = {w}, expected {expected}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(triple)
    }

    /// The flat triple on ℍ ≅ ℝ⁴ whose product structure with ℝ³ is the
    /// standard `(φ₀, ψ)` when the block is (4,5,6,7) and ℝ³ is (1,2,3).
    /// With block coordinates (y₀,y₁,y₂,y₃):
    /// `ω₁ = −dy₀₁ − dy₂₃`, `ω₂ = −dy₀₂ + dy₁₃`, `ω₃ = dy₀₃ + dy₁₂`.
    pub fn flat(block: [usize; 4]) -> Result<Self> {
        let [y0, y1, y2, y3] = block;
        let pair = |a: usize, b: usize| product_of(&[a, b]);
        let omega = [
            -&(&pair(y0, y1) + &pair(y2, y3)),
            &pair(y1, y3) - &pair(y0, y2),
            &pair(y0, y3) + &pair(y1, y2),
        ];
        Self::new(omega, block)
    }

    pub fn omega(&self) -> &[KForm; 3] {
        &self.omega
    }

    pub fn block(&self) -> [usize; 4] {
        self.block
    }

    /// `dy₀ ∧ dy₁ ∧ dy₂ ∧ dy₃` in block order.
    pub fn volume(&self) -> KForm {
        product_of(&self.block)
    }

    /// True iff `b` is a 2-form on the block with `b ∧ ωᵢ = 0` for all i.
    pub fn is_anti_self_dual(&self, b: &KForm) -> bool {
        b.degree() == 2
            && b.supported_on(&self.block)
            && self
                .omega
                .iter()
                .all(|w| wedge(b, w).map(|x| x.is_zero()).unwrap_or(false))
    }

    /// Basis of the 2-forms on the block annihilated by all three ωᵢ.
    pub fn anti_self_dual_basis(&self) -> Vec<KForm> {
        let pairs: Vec<KForm> = (0..4)
            .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
            .map(|(i, j)| product_of(&[self.block[i], self.block[j]]))
            .collect();
        // columns: pair basis; rows: coefficients of b∧ωᵢ along vol
        let vol = self.volume();
        let vol_mask = self.block.iter().fold(0u8, |m, &i| m | 1 << (i - 1));
        let mut m = Matrix::zeros(3, pairs.len());
        for (col, p) in pairs.iter().enumerate() {
            for (row, w) in self.omega.iter().enumerate() {
                let x = wedge(p, w).expect("degree 4");
                m[(row, col)] = x.coeff_mask(vol_mask) / vol.coeff_mask(vol_mask);
            }
        }
        m.kernel()
            .into_iter()
            .map(|v| {
                v.iter()
                    .zip(&pairs)
                    .fold(KForm::zero(2).expect("degree 2"), |acc, (c, p)| &acc + &p.scale(c))
            })
            .collect()
    }
}

/// Product G₂-structure on ℝ³ × ℍ:
/// `φ = dx_{abc} − Σ dxᵢ ∧ ωᵢ` and `*φ = vol_ℍ − Σ_{cyclic} ωᵢ ∧ dx_{jk}`.
pub fn product_g2(triple: &HyperkahlerTriple, r3_coords: [usize; 3]) -> Result<(KForm, KForm)> {
    let mut all: Vec<usize> = r3_coords.iter().chain(triple.block.iter()).copied().collect();
    all.sort_unstable();
    if all != (1..=DIM).collect::<Vec<_>>() {
        return Err(Error::CoordinateOverlap(format!(
            "ℝ³ coordinates {r3_coords:?} and block {:?}",
            triple.block
        )));
    }
    let mut phi = product_of(&r3_coords);
    for (i, w) in triple.omega.iter().enumerate() {
        phi = &phi - &wedge(&one_form(r3_coords[i]), w)?;
    }
    let mut psi = triple.volume();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let dxjk = product_of(&[r3_coords[j], r3_coords[k]]);
        psi = &psi - &wedge(&triple.omega[i], &dxjk)?;
    }
    Ok((phi, psi))
}

fn sample_form(s: &mut RationalSampler, degree: usize) -> KForm {
    let coeffs = (0..basis_len(degree))
        .map(|_| if s.index(3) == 0 { s.rational() } else { Q::zero() })
        .collect();
    KForm::from_coefficients(degree, coeffs).expect("valid degree")
}

fn sample_vector(s: &mut RationalSampler) -> Vector7 {
    Vector7(std::array::from_fn(|_| s.rational()))
}

/// The G₂ linear-algebra property suite on seeded rational samples.
pub fn property_suite(samples: usize, seed: u64) -> Vec<PropertyCheck> {
    let mut s = RationalSampler::new(seed);
    let phi = standard_phi();
    let psi = standard_psi();
    let mut checks = Vec::new();

    let star_involution = (0..=DIM).all(|k| (0..samples.min(50)).all(|_| {
        let a = sample_form(&mut s, k);
        hodge_star(&hodge_star(&a)) == a
    }));
    checks.push(PropertyCheck::new("** = 1 on every degree", star_involution, 8 * samples.min(50)));

    let volume = wedge(&phi, &psi).map(|x| x == KForm::volume().scale(&q(7))).unwrap_or(false);
    checks.push(PropertyCheck::new("φ₀ ∧ ψ = 7·vol", volume, 1));

    let graded = (0..samples.min(50)).all(|_| {
        let (k, l) = (1 + s.index(3), 1 + s.index(3));
        let (a, b) = (sample_form(&mut s, k), sample_form(&mut s, l));
        let ab = wedge(&a, &b).expect("degree ≤ 6");
        let ba = wedge(&b, &a).expect("degree ≤ 6");
        if (k * l) % 2 == 0 { ab == ba } else { ab == -&ba }
    });
    checks.push(PropertyCheck::new("a∧b = (−1)^{kl} b∧a", graded, samples.min(50)));

    let two_forms = (0..samples.min(100)).all(|_| {
        let a = sample_form(&mut s, 2);
        let (p7, p14) = project_2forms(&a).expect("degree 2");
        let e7 = hodge_star(&wedge(&p7, &phi).expect("3")) == p7.scale(&q(2));
        let e14 = hodge_star(&wedge(&p14, &phi).expect("3")) == -&p14;
        let psi14 = wedge(&p14, &psi).expect("6").is_zero();
        e7 && e14 && psi14 && &p7 + &p14 == a
    });
    checks.push(PropertyCheck::new(
        "Λ²₇/Λ²₁₄ eigenvalues 2/−1 and p14∧ψ = 0",
        two_forms,
        samples.min(100),
    ));

    let three_forms = (0..samples.min(100)).all(|_| {
        let a = sample_form(&mut s, 3);
        let (p1, p7, p27) = project_3forms(&a).expect("degree 3");
        let in7 = {
            // p7 = i(u)ψ for the u read off from ⟨p7, i(e_k)ψ⟩/4
            let u = Vector7(std::array::from_fn(|k| {
                inner(&p7, &interior(&Vector7::e(k + 1), &psi).expect("4")) / q(4)
            }));
            interior(&u, &psi).expect("4") == p7
        };
        let sum = &(&p1 + &p7) + &p27 == a;
        let pure = wedge(&p27, &phi).expect("6").is_zero() && wedge(&p27, &psi).expect("7").is_zero();
        sum && in7 && pure
    });
    checks.push(PropertyCheck::new(
        "Λ³ = Λ³₁ ⊕ Λ³₇ ⊕ Λ³₂₇ with p27∧φ₀ = p27∧ψ = 0",
        three_forms,
        samples.min(100),
    ));

    let dims = component_dimensions();
    checks.push(PropertyCheck::new(
        "projector ranks (7, 14) and (1, 7, 27)",
        dims.two == (7, 14) && dims.three == (1, 7, 27),
        1,
    ));

    let mut defining = true;
    let mut orthogonal = true;
    let mut norm = true;
    for _ in 0..samples {
        let (u, v, w) = (sample_vector(&mut s), sample_vector(&mut s), sample_vector(&mut s));
        let uv = cross_product(&u, &v);
        defining &= evaluate(&phi, &[u.clone(), v.clone(), w.clone()]).expect("3 vectors") == uv.dot(&w);
        orthogonal &= uv.dot(&u).is_zero() && uv.dot(&v).is_zero();
        let uvdot = u.dot(&v);
        norm &= uv.norm_sq() == u.norm_sq() * v.norm_sq() - &uvdot * &uvdot;
    }
    checks.push(PropertyCheck::new("φ₀(u,v,w) = ⟨u×v, w⟩", defining, samples));
    checks.push(PropertyCheck::new("u×v ⟂ u, v", orthogonal, samples));
    checks.push(PropertyCheck::new("|u×v|² = |u|²|v|² − ⟨u,v⟩²", norm, samples));

    let triple = HyperkahlerTriple::flat([4, 5, 6, 7]).expect("flat triple");
    let asd = triple.anti_self_dual_basis();
    let annihilated = asd.len() == 3
        && (0..samples.min(100)).all(|_| {
            let b = asd
                .iter()
                .fold(KForm::zero(2).expect("2"), |acc, x| &acc + &x.scale(&s.rational()));
            triple.is_anti_self_dual(&b) && wedge(&b, &psi).expect("6").is_zero()
        });
    checks.push(PropertyCheck::new("ASD 2-forms on ℍ satisfy b∧ψ = 0", annihilated, samples.min(100)));

    let product = product_g2(&triple, [1, 2, 3]).map(|(f, g)| f == phi && g == psi).unwrap_or(false);
    checks.push(PropertyCheck::new("product structure on ℝ³ × ℍ equals (φ₀, ψ)", product, 1));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn dx(i: &[usize]) -> KForm {
        KForm::dx(i).unwrap()
    }

    #[test]
    fn basis_sizes_are_binomial() {
        let sizes: Vec<usize> = (0..=7).map(basis_len).collect();
        assert_eq!(sizes, vec![1, 7, 21, 35, 35, 21, 7, 1]);
        let two = &tables().masks[2];
        assert_eq!(mask_indices(two[0]), vec![1, 2]);
        assert_eq!(mask_indices(two[6]), vec![2, 3]);
    }

    #[test]
    fn invalid_indices_rejected() {
        assert!(KForm::dx(&[2, 1]).is_err());
        assert!(KForm::dx(&[1, 1]).is_err());
        assert!(KForm::dx(&[0]).is_err());
        assert!(KForm::dx(&[8]).is_err());
        assert!(KForm::zero(8).is_err());
    }

    #[test]
    fn wedge_basics() {
        assert_eq!(dx(&[1]).wedge(&dx(&[2])).unwrap(), dx(&[1, 2]));
        assert_eq!(dx(&[2]).wedge(&dx(&[1])).unwrap(), -&dx(&[1, 2]));
        assert!(dx(&[1, 2]).wedge(&dx(&[1, 2])).unwrap().is_zero());
        assert!(dx(&[1, 2, 3]).wedge(&dx(&[1, 5, 6, 7])).unwrap().is_zero());
        assert_eq!(dx(&[4, 5]).wedge(&dx(&[1, 2, 3])).unwrap(), dx(&[1, 2, 3, 4, 5]));
        assert_eq!(
            dx(&[1, 2, 3, 4]).wedge(&dx(&[4, 5, 6, 7])),
            Err(Error::DegreeOverflow(4, 4))
        );
    }

    #[test]
    fn star_of_basis_and_volume() {
        assert_eq!(dx(&[1, 2, 3]).star(), dx(&[4, 5, 6, 7]));
        assert_eq!(KForm::volume(), dx(&[1, 2, 3, 4, 5, 6, 7]));
        assert_eq!(dx(&[1, 2, 3, 4, 5, 6, 7]).star(), KForm::scalar(Q::one()));
        assert_eq!(dx(&[2]).star(), -&dx(&[1, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn standard_phi_coefficients() {
        let phi = standard_phi();
        assert_eq!(phi.coeff(&[1, 2, 3]), q(1));
        assert_eq!(phi.coeff(&[2, 5, 7]), q(-1));
        assert_eq!(phi.coeff(&[1, 2, 4]), q(0));
        assert_eq!(phi.nonzero_count(), 7);
    }

    #[test]
    fn interior_signs() {
        let v = interior(&Vector7::e(2), &dx(&[1, 2, 3])).unwrap();
        assert_eq!(v, -&dx(&[1, 3]));
        assert!(interior(&Vector7::e(4), &dx(&[1, 2, 3])).unwrap().is_zero());
        assert!(interior(&Vector7::e(1), &KForm::scalar(q(1))).is_err());
    }

    #[test]
    fn cross_product_examples() {
        assert_eq!(cross_product(&Vector7::e(1), &Vector7::e(2)), Vector7::e(3));
        assert_eq!(cross_product(&Vector7::e(1), &Vector7::e(4)), Vector7::e(5));
        let u = Vector7::from_ints([1, -2, 3, 0, 5, 1, 1]);
        assert!(cross_product(&u, &u).is_zero());
    }

    #[test]
    fn two_form_projection_examples() {
        let i_e1_phi = interior(&Vector7::e(1), &standard_phi()).unwrap();
        let a = KForm::from_int_terms(2, &[(&[2, 3], 1), (&[4, 5], 1), (&[6, 7], 1)]).unwrap();
        assert_eq!(a, i_e1_phi);
        let (p7, p14) = project_2forms(&a).unwrap();
        assert_eq!(p7, a);
        assert!(p14.is_zero());

        let b = KForm::from_int_terms(2, &[(&[2, 3], 1), (&[4, 5], -1)]).unwrap();
        let (p7, p14) = project_2forms(&b).unwrap();
        assert!(p7.is_zero());
        assert_eq!(p14, b);

        let (p7, p14) = project_2forms(&KForm::zero(2).unwrap()).unwrap();
        assert!(p7.is_zero() && p14.is_zero());
        assert!(project_2forms(&dx(&[1])).is_err());
    }

    #[test]
    fn three_form_projection_examples() {
        let phi = standard_phi();
        let (p1, p7, p27) = project_3forms(&phi).unwrap();
        assert_eq!(p1, phi);
        assert!(p7.is_zero() && p27.is_zero());

        let a = interior(&Vector7::e(1), &standard_psi()).unwrap();
        let (p1, p7, p27) = project_3forms(&a).unwrap();
        assert!(p1.is_zero() && p27.is_zero());
        assert_eq!(p7, a);
    }

    #[test]
    fn pullback_examples() {
        let phi = standard_phi();
        assert_eq!(pullback(&LinearMap7::identity(), &phi), phi);
        let alpha = LinearMap7::diag_ints([1, 1, 1, -1, -1, -1, -1]);
        assert_eq!(pullback(&alpha, &phi), phi);
        let two = LinearMap7::scalar(&q(2));
        assert_eq!(pullback(&two, &dx(&[1])), dx(&[1]).scale(&q(2)));
        assert_eq!(pullback(&two, &dx(&[1, 2])), dx(&[1, 2]).scale(&q(4)));
    }

    #[test]
    fn preserves_phi_examples() {
        assert!(preserves_phi(&LinearMap7::identity()));
        assert!(!preserves_phi(&LinearMap7::diag_ints([-1, 1, 1, 1, 1, 1, 1])));
        assert!(preserves_phi(&LinearMap7::diag_ints([1, -1, -1, 1, 1, -1, -1])));
        assert!(!preserves_phi(&LinearMap7::scalar(&frac(1, 2))));
    }

    #[test]
    fn signed_pullback_matches_general() {
        // x₁ ↦ −x₂, x₂ ↦ x₁, rest fixed
        let images = [(1, true), (0, false), (2, false), (3, false), (4, false), (5, false), (6, false)];
        let mut m = LinearMap7::identity();
        m.0[0] = std::array::from_fn(|j| if j == 1 { q(-1) } else { q(0) });
        m.0[1] = std::array::from_fn(|j| if j == 0 { q(1) } else { q(0) });
        for form in [standard_phi(), standard_psi(), dx(&[1, 2]), dx(&[1, 3, 5])] {
            assert_eq!(pullback_signed(&images, &form), pullback(&m, &form));
        }
    }

    #[test]
    fn flat_triple_reproduces_standard_structure() {
        let triple = HyperkahlerTriple::flat([4, 5, 6, 7]).unwrap();
        let (phi, psi) = product_g2(&triple, [1, 2, 3]).unwrap();
        assert_eq!(phi, standard_phi());
        assert_eq!(psi, standard_psi());
        assert_eq!(phi.nonzero_count(), 7);
    }

    #[test]
    fn triple_rejects_bad_input() {
        let t = HyperkahlerTriple::flat([4, 5, 6, 7]).unwrap();
        assert!(matches!(product_g2(&t, [1, 2, 4]), Err(Error::CoordinateOverlap(_))));
        let mut omega = t.omega().clone();
        omega[1] = omega[0].clone();
        assert!(matches!(HyperkahlerTriple::new(omega, [4, 5, 6, 7]), Err(Error::InvalidTriple(_))));
        let mut omega = t.omega().clone();
        omega[0] = dx(&[1, 2]);
        assert!(matches!(HyperkahlerTriple::new(omega, [4, 5, 6, 7]), Err(Error::InvalidTriple(_))));
    }

    #[test]
    fn asd_forms_are_annihilated_by_psi() {
        let triple = HyperkahlerTriple::flat([4, 5, 6, 7]).unwrap();
        let basis = triple.anti_self_dual_basis();
        assert_eq!(basis.len(), 3);
        let (_, psi) = product_g2(&triple, [1, 2, 3]).unwrap();
        for b in &basis {
            assert!(triple.is_anti_self_dual(b));
            assert!(wedge(b, &psi).unwrap().is_zero());
        }
        // ω₁ itself is self-dual and is not annihilated
        assert!(!wedge(&triple.omega()[0], &psi).unwrap().is_zero());
    }

    #[test]
    fn property_suite_passes() {
        for c in property_suite(40, 3) {
            assert!(c.passed, "{}", c.name);
        }
    }

    #[test]
    fn display_is_readable() {
        let f = KForm::from_int_terms(2, &[(&[1, 2], 1), (&[3, 4], -2)]).unwrap();
        assert_eq!(f.to_string(), "dx12 - 2·dx34");
        assert_eq!(KForm::zero(3).unwrap().to_string(), "0");
    }
}
