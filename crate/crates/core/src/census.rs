//! Census of holonomy assignments ρ: ⟨α, β, γ, τ₁, …, τ₇⟩ → {I, a, b, c} ⊂ SO(3).
//!
//! A flat connection is irreducible (resp. infinitesimally rigid) iff the
//! induced action on so(3) (resp. ℝ⁷ ⊗ so(3)) has no nonzero fixed vector.
//! Every matrix involved is diagonal in the basis (L_a, L_b, L_c) of so(3)
//! and the coordinate basis of ℝ⁷, so both tests reduce to sign grids:
//! a 3-bit mask for so(3) and a 21-bit mask for ℝ⁷ ⊗ so(3).
//!
//! Assignments are encoded as 20-bit integers, two bits per generator with α
//! in the most significant position, so numeric order is lexicographic order
//! on the 10-tuple.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbifold::{Generator, RelationTable, ALPHA_SIGNS, BETA_SIGNS, GAMMA_SIGNS};

pub const GENERATORS: usize = 10;
/// Column names for the ten generator images.
pub const GENERATOR_NAMES: [&str; GENERATORS] =
    ["alpha", "beta", "gamma", "tau1", "tau2", "tau3", "tau4", "tau5", "tau6", "tau7"];
/// 4¹⁰.
pub const ASSIGNMENT_COUNT: u32 = 1 << (2 * GENERATORS);
const ALL_AXES: u8 = 0b111;
const ALL_PAIRS: u32 = (1 << 21) - 1;

/// Element of the Klein four-group {I, a, b, c} ⊂ SO(3) with
/// a = diag(1,−1,−1), b = diag(−1,1,−1), c = diag(−1,−1,1).
/// Encoded in two bits; the group law is XOR.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TargetElement(u8);

impl TargetElement {
    pub const I: TargetElement = TargetElement(0);
    pub const A: TargetElement = TargetElement(1);
    pub const B: TargetElement = TargetElement(2);
    pub const C: TargetElement = TargetElement(3);
    pub const ALL: [TargetElement; 4] = [Self::I, Self::A, Self::B, Self::C];

    pub fn from_code(code: u8) -> Self {
        TargetElement(code & 3)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    /// Diagonal of the 3×3 matrix.
    pub fn diagonal(self) -> [i8; 3] {
        match self.0 {
            0 => [1, 1, 1],
            1 => [1, -1, -1],
            2 => [-1, 1, -1],
            _ => [-1, -1, 1],
        }
    }

    pub fn letter(self) -> char {
        ['I', 'a', 'b', 'c'][self.0 as usize]
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'I' => Some(Self::I),
            'a' => Some(Self::A),
            'b' => Some(Self::B),
            'c' => Some(Self::C),
            _ => None,
        }
    }
}

impl std::ops::Mul for TargetElement {
    type Output = TargetElement;
    // the Klein four-group law on the two-bit codes is XOR
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: TargetElement) -> TargetElement {
        TargetElement(self.0 ^ other.0)
    }
}

impl fmt::Display for TargetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Signs of Ad(t) on (L_a, L_b, L_c): Ad(diag(d)) L_i = d_j d_k L_i.
pub fn ad_signs(t: TargetElement) -> [i8; 3] {
    let d = t.diagonal();
    [d[1] * d[2], d[0] * d[2], d[0] * d[1]]
}

/// Axes on which Ad(t) acts by −1, as a 3-bit mask.
pub fn ad_negative_axes(t: TargetElement) -> u8 {
    ad_signs(t)
        .iter()
        .enumerate()
        .filter(|(_, &s)| s < 0)
        .fold(0, |m, (k, _)| m | 1 << k)
}

/// Diagonal signs of the linear part of each generator acting on ℝ⁷
/// (parallel transport); translations act trivially.
pub fn generator_linear_signs(g: Generator) -> [i8; 7] {
    match g {
        Generator::Alpha => ALPHA_SIGNS,
        Generator::Beta => BETA_SIGNS,
        Generator::Gamma => GAMMA_SIGNS,
        Generator::Tau(_) => [1; 7],
    }
}

/// ρ on the ten generators, in the order α, β, γ, τ₁, …, τ₇.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HolonomyAssignment {
    images: [TargetElement; GENERATORS],
}

impl HolonomyAssignment {
    pub fn new(images: [TargetElement; GENERATORS]) -> Self {
        HolonomyAssignment { images }
    }

    pub fn trivial() -> Self {
        Self::new([TargetElement::I; GENERATORS])
    }

    /// Decodes the 20-bit lexicographic index.
    pub fn from_code(code: u32) -> Self {
        HolonomyAssignment {
            images: std::array::from_fn(|slot| {
                TargetElement::from_code((code >> (2 * (GENERATORS - 1 - slot))) as u8)
            }),
        }
    }

    pub fn code(&self) -> u32 {
        self.images
            .iter()
            .fold(0u32, |acc, t| (acc << 2) | t.code() as u32)
    }

    pub fn images(&self) -> &[TargetElement; GENERATORS] {
        &self.images
    }

    pub fn get(&self, g: Generator) -> TargetElement {
        self.images[g.slot()]
    }

    pub fn with(mut self, g: Generator, t: TargetElement) -> Self {
        self.images[g.slot()] = t;
        self
    }

    /// Ten letters from {I, a, b, c}.
    pub fn letters(&self) -> String {
        self.images.iter().map(|t| t.letter()).collect()
    }

    pub fn parse_letters(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != GENERATORS {
            return Err(Error::Parse(format!("expected 10 letters from I/a/b/c, got {s:?}")));
        }
        let mut images = [TargetElement::I; GENERATORS];
        for (slot, c) in chars.into_iter().enumerate() {
            images[slot] = TargetElement::from_letter(c)
                .ok_or_else(|| Error::Parse(format!("invalid holonomy letter {c:?}")))?;
        }
        Ok(Self::new(images))
    }
}

impl Serialize for HolonomyAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.letters())
    }
}

impl fmt::Display for HolonomyAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters())
    }
}

/// Precomputed sign grids: for each generator slot and target element, the
/// so(3) axes and the (coordinate, axis) pairs on which the product sign is −1.
struct SignTables {
    axes: [[u8; 4]; GENERATORS],
    pairs: [[u32; 4]; GENERATORS],
}

const fn build_tables() -> SignTables {
    let mut axes = [[0u8; 4]; GENERATORS];
    let mut pairs = [[0u32; 4]; GENERATORS];
    let signs: [[i8; 7]; 3] = [ALPHA_SIGNS, BETA_SIGNS, GAMMA_SIGNS];
    // negative axes of Ad(I), Ad(a), Ad(b), Ad(c)
    let neg_axes: [u8; 4] = [0b000, 0b110, 0b101, 0b011];
    let mut slot = 0;
    while slot < GENERATORS {
        let mut t = 0;
        while t < 4 {
            axes[slot][t] = neg_axes[t];
            let mut mask = 0u32;
            let mut j = 0;
            while j < 7 {
                let coord_negative = slot < 3 && signs[slot][j] < 0;
                let row = if coord_negative { !neg_axes[t] & ALL_AXES } else { neg_axes[t] };
                mask |= (row as u32) << (3 * j);
                j += 1;
            }
            pairs[slot][t] = mask;
            t += 1;
        }
        slot += 1;
    }
    SignTables { axes, pairs }
}

static TABLES: SignTables = build_tables();

#[inline]
fn target_at(code: u32, slot: usize) -> usize {
    ((code >> (2 * (GENERATORS - 1 - slot))) & 3) as usize
}

fn irreducible_code(code: u32) -> bool {
    let mut seen = 0u8;
    for slot in 0..GENERATORS {
        seen |= TABLES.axes[slot][target_at(code, slot)];
    }
    seen == ALL_AXES
}

fn rigid_code(code: u32) -> bool {
    let mut seen = 0u32;
    for slot in 0..GENERATORS {
        seen |= TABLES.pairs[slot][target_at(code, slot)];
    }
    seen == ALL_PAIRS
}

fn flat_code(code: u32) -> bool {
    code >> 14 == 0
}

/// No nonzero vector of so(3) is fixed by Ad∘ρ of every generator.
pub fn is_irreducible(rho: &HolonomyAssignment) -> bool {
    irreducible_code(rho.code())
}

/// No nonzero vector of ℝ⁷ ⊗ so(3) is fixed by D_g ⊗ Ad(ρ(g)) for every
/// generator g (D_τ = I).
pub fn is_rigid(rho: &HolonomyAssignment) -> bool {
    rigid_code(rho.code())
}

/// ρ(α) = ρ(β) = ρ(γ) = I: the connection glues to a flat one.
pub fn is_flat_on_resolution(rho: &HolonomyAssignment) -> bool {
    flat_code(rho.code())
}

/// At least two of τ₁, …, τ₇ are sent to different non-identity elements.
pub fn tau_condition(rho: &HolonomyAssignment) -> bool {
    let mut seen = [false; 4];
    for i in 1..=7 {
        seen[rho.get(Generator::Tau(i)).code() as usize] = true;
    }
    seen[1..].iter().filter(|&&b| b).count() >= 2
}

/// The relations of a [`RelationTable`] as constraints on assignments:
/// each mask lists generator slots whose images must multiply to I.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationConstraints {
    masks: Vec<u16>,
}

impl RelationConstraints {
    /// In the Klein four-group every element is an involution and the group
    /// is abelian, so `g² = τ^t` and `[g, h] = τ^t` both reduce to
    /// `∏ ρ(τ_i)^{t_i mod 2} = I`, and `g τ_i g⁻¹ = τ_j^{±1}` to `ρ(τ_i) = ρ(τ_j)`.
    pub fn from_table(table: &RelationTable) -> Self {
        let mut masks = Vec::new();
        for rel in table.translation_relations() {
            let mask = rel
                .translation
                .iter()
                .enumerate()
                .filter(|(_, &t)| t.rem_euclid(2) == 1)
                .fold(0u16, |m, (i, _)| m | 1 << Generator::Tau(i as u8 + 1).slot());
            masks.push(mask);
        }
        for c in &table.conjugates {
            let mask = (1u16 << Generator::Tau(c.tau as u8).slot()) ^ (1u16 << Generator::Tau(c.image_tau as u8).slot());
            masks.push(mask);
        }
        masks.retain(|&m| m != 0);
        masks.sort_unstable();
        masks.dedup();
        RelationConstraints { masks }
    }

    pub fn none() -> Self {
        RelationConstraints { masks: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Generator sets whose images must multiply to the identity.
    pub fn constraint_sets(&self) -> Vec<Vec<Generator>> {
        self.masks
            .iter()
            .map(|&m| Generator::ALL.iter().copied().filter(|g| m >> g.slot() & 1 == 1).collect())
            .collect()
    }

    fn satisfied_code(&self, code: u32) -> bool {
        self.masks.iter().all(|&m| {
            let mut acc = 0usize;
            for slot in 0..GENERATORS {
                if m >> slot & 1 == 1 {
                    acc ^= target_at(code, slot);
                }
            }
            acc == 0
        })
    }

    pub fn satisfied(&self, rho: &HolonomyAssignment) -> bool {
        self.satisfied_code(rho.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusMode {
    /// All 4¹⁰ assignments of the ten generators.
    Free,
    /// Only assignments that send every deck-group relation to I.
    Constrained,
}

impl fmt::Display for CensusMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusMode::Free => "free",
            CensusMode::Constrained => "constrained",
        })
    }
}

impl std::str::FromStr for CensusMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(CensusMode::Free),
            "constrained" => Ok(CensusMode::Constrained),
            _ => Err(Error::Parse(format!("unknown census mode {s:?}"))),
        }
    }
}

/// Per-assignment classification.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    pub irreducible: bool,
    pub rigid: bool,
    pub flat_on_resolution: bool,
    pub tau_condition: bool,
}

impl Classification {
    pub fn irreducible_and_rigid(&self) -> bool {
        self.irreducible && self.rigid
    }
}

pub fn classify(rho: &HolonomyAssignment) -> Classification {
    let code = rho.code();
    Classification {
        irreducible: irreducible_code(code),
        rigid: rigid_code(code),
        flat_on_resolution: flat_code(code),
        tau_condition: tau_condition(rho),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusCounts {
    pub total: u64,
    pub irreducible: u64,
    pub rigid: u64,
    pub irreducible_and_rigid: u64,
    pub nonflat_irreducible_rigid: u64,
    /// Assignments where irreducible ∧ rigid disagrees with the τ-condition.
    pub criterion_mismatches: u64,
}

impl CensusCounts {
    fn merge(self, o: CensusCounts) -> CensusCounts {
        CensusCounts {
            total: self.total + o.total,
            irreducible: self.irreducible + o.irreducible,
            rigid: self.rigid + o.rigid,
            irreducible_and_rigid: self.irreducible_and_rigid + o.irreducible_and_rigid,
            nonflat_irreducible_rigid: self.nonflat_irreducible_rigid + o.nonflat_irreducible_rigid,
            criterion_mismatches: self.criterion_mismatches + o.criterion_mismatches,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusReport {
    pub mode: CensusMode,
    pub counts: CensusCounts,
    /// Relation constraints that were enforced (empty in free mode).
    pub constraints: Vec<Vec<Generator>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn total(&self) -> u64 {
        self.counts.total
    }

    pub fn irreducible_and_rigid(&self) -> u64 {
        self.counts.irreducible_and_rigid
    }

    pub fn nonflat_irreducible_rigid(&self) -> u64 {
        self.counts.nonflat_irreducible_rigid
    }
}

fn count_range(range: std::ops::Range<u32>, constraints: &RelationConstraints) -> CensusCounts {
    let mut c = CensusCounts::default();
    for code in range {
        if !constraints.satisfied_code(code) {
            continue;
        }
        c.total += 1;
        let irr = irreducible_code(code);
        let rig = rigid_code(code);
        c.irreducible += irr as u64;
        c.rigid += rig as u64;
        let both = irr && rig;
        if both {
            c.irreducible_and_rigid += 1;
            if !flat_code(code) {
                c.nonflat_irreducible_rigid += 1;
            }
        }
        if both != tau_condition(&HolonomyAssignment::from_code(code)) {
            c.criterion_mismatches += 1;
        }
    }
    c
}

fn constraints_for(mode: CensusMode, relations: Option<&RelationTable>) -> Result<RelationConstraints> {
    match (mode, relations) {
        (CensusMode::Free, _) => Ok(RelationConstraints::none()),
        (CensusMode::Constrained, Some(t)) => Ok(RelationConstraints::from_table(t)),
        (CensusMode::Constrained, None) => Err(Error::Rejected(
            "constrained census needs a relation table".into(),
        )),
    }
}

const CHUNK: u32 = 1 << 14;

/// Enumerates the assignment space and classifies every assignment.
/// The space is split into contiguous ranges counted independently.
pub fn run_census(mode: CensusMode, relations: Option<&RelationTable>) -> Result<CensusReport> {
    let constraints = constraints_for(mode, relations)?;
    let start = Instant::now();
    let counts = (0..ASSIGNMENT_COUNT / CHUNK)
        .into_par_iter()
        .map(|k| count_range(k * CHUNK..(k + 1) * CHUNK, &constraints))
        .reduce(CensusCounts::default, CensusCounts::merge);
    Ok(CensusReport {
        mode,
        counts,
        constraints: constraints.constraint_sets(),
        elapsed: start.elapsed(),
    })
}

/// Single-threaded [`run_census`].
pub fn run_census_serial(mode: CensusMode, relations: Option<&RelationTable>) -> Result<CensusReport> {
    let constraints = constraints_for(mode, relations)?;
    let start = Instant::now();
    let counts = count_range(0..ASSIGNMENT_COUNT, &constraints);
    Ok(CensusReport {
        mode,
        counts,
        constraints: constraints.constraint_sets(),
        elapsed: start.elapsed(),
    })
}

/// Codes of the non-flat, irreducible and rigid assignments, increasing.
pub fn nonflat_irreducible_rigid(mode: CensusMode, relations: Option<&RelationTable>) -> Result<Vec<u32>> {
    let constraints = constraints_for(mode, relations)?;
    Ok((0..ASSIGNMENT_COUNT)
        .into_par_iter()
        .filter(|&code| {
            constraints.satisfied_code(code) && !flat_code(code) && irreducible_code(code) && rigid_code(code)
        })
        .collect())
}

/// `4¹⁰ − 4³·(2⁷·3 − 2)`.
pub fn closed_form_irreducible_rigid() -> u64 {
    4u64.pow(10) - 4u64.pow(3) * (2u64.pow(7) * 3 - 2)
}

/// `4¹⁰ − 4³·(2⁷·3 − 2) − 4⁷ + (2⁷·3 − 2)`.
pub fn closed_form_nonflat() -> u64 {
    closed_form_irreducible_rigid() - 4u64.pow(7) + (2u64.pow(7) * 3 - 2)
}

/// Slow reference path: explicit matrices and exact kernel intersection.
pub mod reference {
    use super::*;
    use crate::linalg::{common_fixed_dim, Matrix};
    use crate::rational::q;

    fn diag(d: &[i8]) -> Matrix {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = q(x as i64);
        }
        m
    }

    /// Basis rotation generators of so(3): (L_k)_{ij} = −ε_{kij}.
    fn so3_basis() -> [Matrix; 3] {
        std::array::from_fn(|k| {
            let mut m = Matrix::zeros(3, 3);
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            m[(i, j)] = q(-1);
            m[(j, i)] = q(1);
            m
        })
    }

    /// Matrix of Ad(t) on so(3) in the basis (L_a, L_b, L_c), computed by
    /// conjugating the basis: Ad(R) L = R L Rᵀ.
    pub fn adjoint_matrix(t: TargetElement) -> Matrix {
        let r = diag(&t.diagonal());
        let basis = so3_basis();
        let mut out = Matrix::zeros(3, 3);
        for (col, l) in basis.iter().enumerate() {
            let image = r.mul(l).mul(&r.transpose());
            // coordinates of a skew matrix in the basis: L_k has +1 at (k+2, k+1)
            for (row, _) in basis.iter().enumerate() {
                let (i, j) = ((row + 1) % 3, (row + 2) % 3);
                out[(row, col)] = image[(j, i)].clone();
            }
        }
        out
    }

    fn kron(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(a.rows * b.rows, a.cols * b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        out[(i * b.rows + k, j * b.cols + l)] = &a[(i, j)] * &b[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// dim of the common fixed subspace of so(3).
    pub fn so3_fixed_dim(rho: &HolonomyAssignment) -> usize {
        let mats: Vec<Matrix> = rho.images().iter().map(|&t| adjoint_matrix(t)).collect();
        common_fixed_dim(&mats)
    }

    /// dim of the common fixed subspace of ℝ⁷ ⊗ so(3).
    pub fn tensor_fixed_dim(rho: &HolonomyAssignment) -> usize {
        let mats: Vec<Matrix> = Generator::ALL
            .iter()
            .map(|&g| kron(&diag(&generator_linear_signs(g)), &adjoint_matrix(rho.get(g))))
            .collect();
        common_fixed_dim(&mats)
    }
}
