//! Affine isometries of ℝ⁷ and T⁷ = ℝ⁷/ℤ⁷, the group Γ = ⟨α, β, γ⟩,
//! its fixed tori and the relations of the deck group ⟨α, β, γ, τ₁, …, τ₇⟩.
//!
//! ```text
//! α: (x₁,…,x₇) ↦ (x₁,  x₂,  x₃, −x₄,    −x₅, −x₆,    −x₇)
//! β: (x₁,…,x₇) ↦ (x₁, −x₂, −x₃,  x₄,     x₅, ½−x₆,   −x₇)
//! γ: (x₁,…,x₇) ↦ (−x₁, x₂, −x₃,  x₄,   ½−x₅,  x₆,  ½−x₇)
//! ```

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::DIM;
use crate::perm::SignedPermutation;
use crate::rational::{format_rational, frac, mod_one, Q};

/// Deck mode keeps exact translations in ℝ⁷; torus mode reduces them mod ℤ⁷.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Mode {
    Deck,
    Torus,
}

/// `x ↦ D x + v` with `D` a signed permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineIsometry {
    linear: SignedPermutation,
    translation: [Q; 7],
    mode: Mode,
}

impl AffineIsometry {
    pub fn new(linear: SignedPermutation, translation: [Q; 7], mode: Mode) -> Self {
        let mut f = AffineIsometry {
            linear,
            translation,
            mode,
        };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        if self.mode == Mode::Torus {
            for t in &mut self.translation {
                *t = mod_one(t);
            }
        }
    }

    pub fn identity(mode: Mode) -> Self {
        AffineIsometry::new(SignedPermutation::identity(), zero_vec(), mode)
    }

    pub fn translation_by(v: [Q; 7], mode: Mode) -> Self {
        AffineIsometry::new(SignedPermutation::identity(), v, mode)
    }

    pub fn linear(&self) -> &SignedPermutation {
        &self.linear
    }

    pub fn translation(&self) -> &[Q; 7] {
        &self.translation
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn in_mode(&self, mode: Mode) -> Self {
        AffineIsometry::new(self.linear, self.translation.clone(), mode)
    }

    pub fn is_identity(&self) -> bool {
        self.linear == SignedPermutation::identity() && self.translation.iter().all(Zero::is_zero)
    }

    /// Identity linear part and integer translation.
    pub fn is_lattice_translation(&self) -> bool {
        self.linear == SignedPermutation::identity() && self.translation.iter().all(Q::is_integer)
    }

    /// The translation vector as integers, if this is a lattice translation.
    pub fn lattice_vector(&self) -> Option<[i64; 7]> {
        if !self.is_lattice_translation() {
            return None;
        }
        let mut out = [0i64; 7];
        for (o, t) in out.iter_mut().zip(&self.translation) {
            *o = i64::try_from(t.to_integer()).ok()?;
        }
        Some(out)
    }

    fn apply_linear(&self, x: &[Q; 7]) -> [Q; 7] {
        let mut out = zero_vec();
        let perm = self.linear.perm();
        let signs = self.linear.signs();
        for j in 0..DIM {
            let v = &x[j];
            out[perm[j] as usize] = if signs[j] < 0 { -v } else { v.clone() };
        }
        out
    }

    /// `D x + v`, reduced mod ℤ⁷ in torus mode.
    pub fn apply(&self, x: &[Q; 7]) -> [Q; 7] {
        let mut y = self.apply_linear(x);
        for (a, b) in y.iter_mut().zip(&self.translation) {
            *a += b;
        }
        if self.mode == Mode::Torus {
            for a in &mut y {
                *a = mod_one(a);
            }
        }
        y
    }

    /// `(D₁, v₁) ∘ (D₂, v₂) = (D₁D₂, D₁v₂ + v₁)`.
    pub fn compose(&self, other: &AffineIsometry) -> AffineIsometry {
        let mut v = self.apply_linear(&other.translation);
        for (a, b) in v.iter_mut().zip(&self.translation) {
            *a += b;
        }
        AffineIsometry::new(self.linear.compose(&other.linear), v, self.mode)
    }

    pub fn inverse(&self) -> AffineIsometry {
        let inv = self.linear.inverse();
        let shell = AffineIsometry::new(inv, zero_vec(), self.mode);
        let mut v = shell.apply_linear(&self.translation);
        for a in &mut v {
            *a = -a.clone();
        }
        AffineIsometry::new(inv, v, self.mode)
    }

    /// `f g f⁻¹ g⁻¹`.
    pub fn commutator(&self, g: &AffineIsometry) -> AffineIsometry {
        self.compose(g).compose(&self.inverse()).compose(&g.inverse())
    }

    /// `f g f⁻¹`.
    pub fn conjugate(&self, g: &AffineIsometry) -> AffineIsometry {
        self.compose(g).compose(&self.inverse())
    }
}

impl fmt::Display for AffineIsometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.translation.iter().map(format_rational).collect();
        write!(f, "{} + ({})", self.linear, v.join(", "))
    }
}

fn zero_vec() -> [Q; 7] {
    std::array::from_fn(|_| Q::zero())
}

fn half_at(coords: &[usize]) -> [Q; 7] {
    std::array::from_fn(|i| if coords.contains(&(i + 1)) { frac(1, 2) } else { Q::zero() })
}

pub const ALPHA_SIGNS: [i8; 7] = [1, 1, 1, -1, -1, -1, -1];
pub const BETA_SIGNS: [i8; 7] = [1, -1, -1, 1, 1, -1, -1];
pub const GAMMA_SIGNS: [i8; 7] = [-1, 1, -1, 1, -1, 1, -1];

pub fn alpha(mode: Mode) -> AffineIsometry {
    AffineIsometry::new(SignedPermutation::diagonal(ALPHA_SIGNS), zero_vec(), mode)
}

pub fn beta(mode: Mode) -> AffineIsometry {
    AffineIsometry::new(SignedPermutation::diagonal(BETA_SIGNS), half_at(&[6]), mode)
}

pub fn gamma(mode: Mode) -> AffineIsometry {
    AffineIsometry::new(SignedPermutation::diagonal(GAMMA_SIGNS), half_at(&[5, 7]), mode)
}

/// Unit translation in coordinate `i` (1-based).
pub fn tau(i: usize, mode: Mode) -> AffineIsometry {
    assert!((1..=DIM).contains(&i), "tau index out of range");
    let v = std::array::from_fn(|k| if k + 1 == i { Q::one() } else { Q::zero() });
    AffineIsometry::translation_by(v, mode)
}

/// Generators of the orbifold fundamental group, in the fixed order
/// α, β, γ, τ₁, …, τ₇.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Alpha,
    Beta,
    Gamma,
    Tau(u8),
}

impl Generator {
    pub const ALL: [Generator; 10] = [
        Generator::Alpha,
        Generator::Beta,
        Generator::Gamma,
        Generator::Tau(1),
        Generator::Tau(2),
        Generator::Tau(3),
        Generator::Tau(4),
        Generator::Tau(5),
        Generator::Tau(6),
        Generator::Tau(7),
    ];

    /// Position in [`Generator::ALL`].
    pub fn slot(self) -> usize {
        match self {
            Generator::Alpha => 0,
            Generator::Beta => 1,
            Generator::Gamma => 2,
            Generator::Tau(i) => 2 + i as usize,
        }
    }

    pub fn isometry(self, mode: Mode) -> AffineIsometry {
        match self {
            Generator::Alpha => alpha(mode),
            Generator::Beta => beta(mode),
            Generator::Gamma => gamma(mode),
            Generator::Tau(i) => tau(i as usize, mode),
        }
    }

    pub fn name(self) -> String {
        match self {
            Generator::Alpha => "alpha".into(),
            Generator::Beta => "beta".into(),
            Generator::Gamma => "gamma".into(),
            Generator::Tau(i) => format!("tau{i}"),
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Γ's generators α, β, γ in the given mode.
pub fn gamma_generators(mode: Mode) -> Vec<AffineIsometry> {
    vec![alpha(mode), beta(mode), gamma(mode)]
}

pub const DEFAULT_GROUP_CAP: usize = 1 << 16;

/// Closure of `gens` under composition and inverses (torus mode), sorted.
pub fn generate_group(gens: &[AffineIsometry], cap: usize) -> Result<Vec<AffineIsometry>> {
    let gens: Vec<AffineIsometry> = gens.iter().map(|g| g.in_mode(Mode::Torus)).collect();
    let id = AffineIsometry::identity(Mode::Torus);
    let mut seen: HashSet<AffineIsometry> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            for y in [g.compose(&x), g.inverse().compose(&x)] {
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::ClosureCapExceeded(cap));
                    }
                    frontier.push(y);
                }
            }
        }
    }
    let mut out: Vec<AffineIsometry> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The group Γ = ⟨α, β, γ⟩ acting on T⁷.
pub fn gamma_group() -> Vec<AffineIsometry> {
    generate_group(&gamma_generators(Mode::Torus), DEFAULT_GROUP_CAP).expect("Γ is finite")
}

/// An affine subtorus of T⁷: free coordinates and pinned values in [0, 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FixedTorus {
    /// 1-based free coordinates, increasing.
    pub free_coords: Vec<usize>,
    /// (1-based coordinate, value in [0,1)), increasing by coordinate.
    #[serde(serialize_with = "serialize_pinned")]
    pub pinned: Vec<(usize, Q)>,
}

fn serialize_pinned<S: serde::Serializer>(pinned: &[(usize, Q)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(pinned.len()))?;
    for (i, v) in pinned {
        m.serialize_entry(&format!("x{i}"), &format_rational(v))?;
    }
    m.end()
}

impl FixedTorus {
    pub fn dimension(&self) -> usize {
        self.free_coords.len()
    }

    /// Point on the torus with the given values for the free coordinates.
    pub fn point(&self, free_values: &[Q]) -> [Q; 7] {
        let mut x = zero_vec();
        for (c, v) in self.free_coords.iter().zip(free_values) {
            x[c - 1] = v.clone();
        }
        for (c, v) in &self.pinned {
            x[c - 1] = v.clone();
        }
        x
    }

    /// Image under an isometry with signed-permutation linear part.
    pub fn image(&self, f: &AffineIsometry) -> FixedTorus {
        let perm = f.linear().perm();
        let signs = f.linear().signs();
        let mut free: Vec<usize> = self.free_coords.iter().map(|&c| perm[c - 1] as usize + 1).collect();
        free.sort_unstable();
        let mut pinned: Vec<(usize, Q)> = self
            .pinned
            .iter()
            .map(|(c, v)| {
                let target = perm[c - 1] as usize;
                let signed = if signs[c - 1] < 0 { -v } else { v.clone() };
                (target + 1, mod_one(&(signed + &f.translation()[target])))
            })
            .collect();
        pinned.sort();
        FixedTorus {
            free_coords: free,
            pinned,
        }
    }
}

impl fmt::Display for FixedTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut pinned = self.pinned.iter().peekable();
        for i in 1..=DIM {
            if self.free_coords.contains(&i) {
                parts.push(format!("x{i}"));
            } else if let Some((_, v)) = pinned.next_if(|(c, _)| *c == i) {
                parts.push(format_rational(v));
            }
        }
        write!(f, "T{}({})", self.dimension(), parts.join(", "))
    }
}

/// Fixed set of an isometry with diagonal ±1 linear part, solved
/// coordinatewise: `D_ii x_i + v_i ≡ x_i (mod 1)` in torus mode (two
/// pinned values per reflected coordinate), `D_ii x_i + v_i = x_i` exactly in
/// deck mode (one value, and no fixed points for a nonzero translation).
pub fn fixed_set(g: &AffineIsometry) -> Result<Vec<FixedTorus>> {
    if !g.linear().is_diagonal() {
        return Err(Error::Unsupported(format!("fixed_set needs a diagonal linear part, got {}", g.linear())));
    }
    let signs = g.linear().signs();
    let mut free = Vec::new();
    let mut choices: Vec<(usize, [Q; 2])> = Vec::new();
    let torus = g.mode() == Mode::Torus;
    for i in 0..DIM {
        let v = if torus { mod_one(&g.translation()[i]) } else { g.translation()[i].clone() };
        if signs[i] > 0 {
            if !v.is_zero() {
                return Ok(Vec::new());
            }
            free.push(i + 1);
        } else {
            // 2x ≡ v (mod 1), or 2x = v in ℝ
            let half = &v / Q::from_integer(2.into());
            let other = mod_one(&(&half + frac(1, 2)));
            choices.push((i + 1, [half, other]));
        }
    }
    if !torus {
        let pinned = choices.into_iter().map(|(c, [x, _])| (c, x)).collect();
        return Ok(vec![FixedTorus {
            free_coords: free,
            pinned,
        }]);
    }
    let mut out = Vec::with_capacity(1 << choices.len());
    for bits in 0u32..(1 << choices.len()) {
        let pinned: Vec<(usize, Q)> = choices
            .iter()
            .enumerate()
            .map(|(n, (c, vals))| (*c, vals[(bits >> (choices.len() - 1 - n) & 1) as usize].clone()))
            .collect();
        out.push(FixedTorus {
            free_coords: free.clone(),
            pinned,
        });
    }
    out.sort();
    Ok(out)
}

/// Fixed tori of every non-identity element and their classes under the group.
#[derive(Clone, Debug, Serialize)]
pub struct SingularSet {
    pub per_element: Vec<(String, Vec<FixedTorus>)>,
    /// Lexicographically minimal representative of each orbit, sorted.
    pub components: Vec<FixedTorus>,
}

impl SingularSet {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// Fixed tori of all non-identity elements of `group`, identified under the
/// action of `group` itself.
pub fn singular_set(group: &[AffineIsometry]) -> Result<SingularSet> {
    let mut per_element = Vec::new();
    let mut all = BTreeSet::new();
    for g in group.iter().filter(|g| !g.is_identity()) {
        let tori = fixed_set(g)?;
        all.extend(tori.iter().cloned());
        per_element.push((g.to_string(), tori));
    }
    let components: BTreeSet<FixedTorus> = all
        .iter()
        .map(|t| group.iter().map(|h| t.image(h)).min().expect("group contains identity"))
        .collect();
    Ok(SingularSet {
        per_element,
        components: components.into_iter().collect(),
    })
}

/// Number of connected components of the singular set of T⁷/group.
pub fn singular_components(group: &[AffineIsometry]) -> Result<usize> {
    Ok(singular_set(group)?.count())
}

/// A square or commutator of α, β, γ, which is a lattice translation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationRelation {
    pub word: String,
    pub translation: [i64; 7],
}

/// `g τ_i g⁻¹ = τ_j^{exponent}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationRelation {
    pub generator: Generator,
    pub tau: usize,
    pub image_tau: usize,
    pub exponent: i8,
}

/// Relations among the ten deck-group generators, computed in deck mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationTable {
    pub squares: Vec<TranslationRelation>,
    pub commutators: Vec<TranslationRelation>,
    pub conjugates: Vec<ConjugationRelation>,
}

impl RelationTable {
    /// All translation vectors `t` with `word = τ^t`.
    pub fn translation_relations(&self) -> impl Iterator<Item = &TranslationRelation> {
        self.squares.iter().chain(&self.commutators)
    }
}

fn lattice_relation(word: String, element: &AffineIsometry) -> Result<TranslationRelation> {
    let translation = element
        .lattice_vector()
        .ok_or_else(|| Error::Consistency(format!("{word} = {element} is not a lattice translation")))?;
    Ok(TranslationRelation { word, translation })
}

/// Squares and commutators of α, β, γ and the conjugates `g τ_i g⁻¹`.
pub fn relation_table() -> Result<RelationTable> {
    let base = [Generator::Alpha, Generator::Beta, Generator::Gamma];
    let iso = |g: Generator| g.isometry(Mode::Deck);
    let mut squares = Vec::new();
    for g in base {
        squares.push(lattice_relation(format!("{g}^2"), &iso(g).compose(&iso(g)))?);
    }
    let mut commutators = Vec::new();
    for g in base {
        for h in base {
            if g != h {
                commutators.push(lattice_relation(format!("[{g},{h}]"), &iso(g).commutator(&iso(h)))?);
            }
        }
    }
    let mut conjugates = Vec::new();
    for g in base {
        for i in 1..=DIM {
            let c = iso(g).conjugate(&tau(i, Mode::Deck));
            let v = c.lattice_vector().ok_or_else(|| {
                Error::Consistency(format!("{g} tau{i} {g}^-1 = {c} is not a lattice translation"))
            })?;
            let nonzero: Vec<(usize, i64)> = v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, &x)| (k, x)).collect();
            match nonzero.as_slice() {
                [(k, e)] if e.abs() == 1 => conjugates.push(ConjugationRelation {
                    generator: g,
                    tau: i,
                    image_tau: k + 1,
                    exponent: *e as i8,
                }),
                _ => {
                    return Err(Error::Consistency(format!("{g} tau{i} {g}^-1 = {c} is not a unit translation")));
                }
            }
        }
    }
    Ok(RelationTable {
        squares,
        commutators,
        conjugates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn alpha_is_an_involution() {
        let a = alpha(Mode::Torus);
        assert!(a.compose(&a).is_identity());
        let b = beta(Mode::Torus);
        assert!(b.compose(&b).is_identity());
    }

    #[test]
    fn commutator_alpha_beta_is_tau6_inverse() {
        let c = alpha(Mode::Deck).commutator(&beta(Mode::Deck));
        assert_eq!(c.lattice_vector(), Some([0, 0, 0, 0, 0, -1, 0]));
    }

    #[test]
    fn inverse_of_tau() {
        let t = tau(1, Mode::Deck).inverse();
        assert_eq!(t.lattice_vector(), Some([-1, 0, 0, 0, 0, 0, 0]));
        let g = gamma(Mode::Deck);
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
    }

    #[test]
    fn group_orders() {
        assert_eq!(gamma_group().len(), 8);
        assert_eq!(generate_group(&[alpha(Mode::Torus)], 100).unwrap().len(), 2);
        assert_eq!(generate_group(&[AffineIsometry::identity(Mode::Torus)], 100).unwrap().len(), 1);
    }

    #[test]
    fn closure_cap_is_enforced() {
        // translation by 1/1000 generates a cyclic group of order 1000
        let mut v = zero_vec();
        v[0] = frac(1, 1000);
        let t = AffineIsometry::translation_by(v, Mode::Torus);
        assert_eq!(generate_group(&[t.clone()], 100), Err(Error::ClosureCapExceeded(100)));
        assert_eq!(generate_group(&[t], 5000).unwrap().len(), 1000);
    }

    #[test]
    fn fixed_sets_of_generators() {
        let fa = fixed_set(&alpha(Mode::Torus)).unwrap();
        assert_eq!(fa.len(), 16);
        assert!(fa.iter().all(|t| t.free_coords == vec![1, 2, 3]));
        assert!(fa.iter().all(|t| t.pinned.iter().all(|(_, v)| *v == q(0) || *v == frac(1, 2))));

        let fb = fixed_set(&beta(Mode::Torus)).unwrap();
        assert_eq!(fb.len(), 16);
        for t in &fb {
            assert_eq!(t.free_coords, vec![1, 4, 5]);
            for (c, v) in &t.pinned {
                if *c == 6 {
                    assert!(*v == frac(1, 4) || *v == frac(3, 4));
                } else {
                    assert!(*v == q(0) || *v == frac(1, 2));
                }
            }
        }
        assert!(fixed_set(&tau(1, Mode::Deck)).unwrap().is_empty());
        // on T⁷ the unit translation is the identity map
        assert_eq!(fixed_set(&tau(1, Mode::Torus)).unwrap()[0].dimension(), 7);
        let deck_alpha = fixed_set(&alpha(Mode::Deck)).unwrap();
        assert_eq!(deck_alpha.len(), 1);
        assert_eq!(deck_alpha[0].pinned.len(), 4);
        let swap = SignedPermutation::new([1, 0, 2, 3, 4, 5, 6], [1; 7]).unwrap();
        assert!(fixed_set(&AffineIsometry::new(swap, zero_vec(), Mode::Torus)).is_err());
    }

    #[test]
    fn fixed_tori_are_fixed() {
        let samples = [q(0), frac(1, 3), frac(5, 7), frac(2, 9)];
        for g in gamma_group() {
            for t in fixed_set(&g).unwrap() {
                for a in &samples {
                    for b in &samples {
                        let vals = vec![a.clone(), b.clone(), a + b, a - b, a * b, b - a, q(3) * a];
                        let x = t.point(&vals[..t.dimension()]);
                        let reduced = x.clone().map(|c| mod_one(&c));
                        assert_eq!(g.apply(&x), reduced, "{g} does not fix {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn singular_component_counts() {
        assert_eq!(singular_components(&gamma_group()).unwrap(), 12);
        let just_alpha = generate_group(&[alpha(Mode::Torus)], 10).unwrap();
        assert_eq!(singular_components(&just_alpha).unwrap(), 16);
        assert_eq!(singular_components(&[AffineIsometry::identity(Mode::Torus)]).unwrap(), 0);
    }

    #[test]
    fn singular_count_invariant_under_translation_conjugation() {
        for shift in [frac(1, 3), frac(1, 4), frac(2, 5)] {
            let mut v = zero_vec();
            v[3] = shift.clone();
            v[6] = -shift.clone();
            v[0] = frac(1, 7);
            let t = AffineIsometry::translation_by(v, Mode::Torus);
            let gens: Vec<AffineIsometry> = gamma_generators(Mode::Torus).iter().map(|g| t.conjugate(g)).collect();
            let group = generate_group(&gens, 100).unwrap();
            assert_eq!(singular_components(&group).unwrap(), 12);
        }
    }

    #[test]
    fn relation_table_contents() {
        let table = relation_table().unwrap();
        assert_eq!(table.squares.len(), 3);
        assert!(table.squares.iter().all(|r| r.translation == [0; 7]));
        assert_eq!(table.commutators.len(), 6);
        let ab = table.commutators.iter().find(|r| r.word == "[alpha,beta]").unwrap();
        assert_eq!(ab.translation, [0, 0, 0, 0, 0, -1, 0]);
        let bg = table.commutators.iter().find(|r| r.word == "[beta,gamma]").unwrap();
        assert!(bg.translation.iter().any(|&x| x != 0));
        let a4 = table
            .conjugates
            .iter()
            .find(|c| c.generator == Generator::Alpha && c.tau == 4)
            .unwrap();
        assert_eq!((a4.image_tau, a4.exponent), (4, -1));
        assert_eq!(table.conjugates.len(), 21);
    }

    #[test]
    fn generator_slots() {
        for (i, g) in Generator::ALL.iter().enumerate() {
            assert_eq!(g.slot(), i);
        }
        assert_eq!(Generator::Tau(3).to_string(), "tau3");
    }
}
