//! The L² index of the deformation operator of an ASD instanton on an ALE
//! space asymptotic to ℂ²/Γ:
//!
//! ```text
//! ind = −2 ∫ p₁(Ad P) + (2/|Γ|) Σ_{g ≠ e} (χ(g) − dim 𝔤) / (2 − tr g)
//! ```
//!
//! Traces and characters live in a cyclotomic field, so the sum is exact
//! even when 2cos(2πm/k) is irrational.

use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::rational::{format_rational, q, Q};

/// One non-identity element (or a class of them) of Γ ⊂ SU(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub label: String,
    /// Trace in the fundamental representation on ℂ².
    pub trace: Cyclotomic,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSubgroupData {
    pub order: u64,
    /// Non-identity elements; all traces lie in ℚ(ζₙ) for n = `field`.
    pub elements: Vec<GroupElement>,
    pub field: usize,
}

impl FiniteSubgroupData {
    /// Validates `Σ multiplicity = |Γ| − 1` and that no trace equals 2.
    pub fn new(order: u64, elements: Vec<GroupElement>, field: usize) -> Result<Self> {
        let total: u64 = elements.iter().map(|e| e.multiplicity).sum();
        if order < 2 || total != order - 1 {
            return Err(Error::Rejected(format!(
                "group of order {order} lists {total} non-identity elements"
            )));
        }
        let two = Cyclotomic::rational(field, q(2));
        for e in &elements {
            if e.trace.order() != field {
                return Err(Error::Rejected(format!("trace of {} is not in ℚ(ζ{field})", e.label)));
            }
            if e.trace == two {
                return Err(Error::Rejected(format!("{} has trace 2", e.label)));
            }
        }
        Ok(FiniteSubgroupData { order, elements, field })
    }

    /// Group data from rational traces, e.g. for binary polyhedral groups.
    pub fn from_rational_traces(order: u64, traces: &[(Q, u64)]) -> Result<Self> {
        let elements = traces
            .iter()
            .enumerate()
            .map(|(i, (t, m))| GroupElement {
                label: format!("g{}", i + 1),
                trace: Cyclotomic::rational(1, t.clone()),
                multiplicity: *m,
            })
            .collect();
        Self::new(order, elements, 1)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// ℤₖ ⊂ SU(2) generated by diag(ζₖ, ζₖ⁻¹); element m has trace 2cos(2πm/k).
pub fn cyclic_group_data(k: u64) -> Result<FiniteSubgroupData> {
    if k < 2 {
        return Err(Error::Rejected(format!("cyclic group order must be at least 2, got {k}")));
    }
    let n = k as usize;
    let elements = (1..k)
        .map(|m| GroupElement {
            label: format!("ζ^{m}"),
            trace: Cyclotomic::two_cos(n, m as i64),
            multiplicity: 1,
        })
        .collect();
    FiniteSubgroupData::new(k, elements, n)
}

/// χ_𝔤 on each listed element, and dim 𝔤.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointCharacter {
    pub dim: u64,
    pub values: Vec<Cyclotomic>,
}

impl AdjointCharacter {
    /// Checks |χ(g)| ≤ dim 𝔤 under the standard complex embedding.
    pub fn new(dim: u64, values: Vec<Cyclotomic>) -> Result<Self> {
        for v in &values {
            let (re, im) = v.to_complex();
            if (re * re + im * im).sqrt() > dim as f64 + 1e-9 {
                return Err(Error::Rejected(format!("character value {v} exceeds dim {dim}")));
            }
        }
        Ok(AdjointCharacter { dim, values })
    }

    pub fn rational(dim: u64, values: &[Q], field: usize) -> Result<Self> {
        Self::new(dim, values.iter().map(|v| Cyclotomic::rational(field, v.clone())).collect())
    }

    /// χ ≡ dim 𝔤.
    pub fn trivial(dim: u64, group: &FiniteSubgroupData) -> Self {
        AdjointCharacter {
            dim,
            values: vec![Cyclotomic::rational(group.field, q(dim as i64)); group.len()],
        }
    }
}

/// Which trace enters the denominator `2 − tr g`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceConvention {
    /// Trace of g in the fundamental representation of SU(2).
    #[default]
    Fundamental,
    /// χ_𝔤(g), the trace of g acting on 𝔤.
    Adjoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexInput {
    pub p1_integral: Q,
    pub group: FiniteSubgroupData,
    pub character: AdjointCharacter,
}

impl IndexInput {
    pub fn new(p1_integral: Q, group: FiniteSubgroupData, character: AdjointCharacter) -> Result<Self> {
        if group.len() != character.values.len() {
            return Err(Error::Rejected(format!(
                "{} group elements but {} character values",
                group.len(),
                character.values.len()
            )));
        }
        if let Some(v) = character.values.iter().find(|v| v.order() != group.field) {
            return Err(Error::Rejected(format!("character value {v} is not in ℚ(ζ{})", group.field)));
        }
        Ok(IndexInput {
            p1_integral,
            group,
            character,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexResult {
    #[serde(serialize_with = "crate::rational::serialize_rational")]
    pub value: Q,
    pub integral: bool,
    pub convention: TraceConvention,
}

/// Evaluates the index formula exactly. A non-integral value is returned
/// with `integral = false` and logged as a warning.
pub fn l2_index(input: &IndexInput, convention: TraceConvention) -> Result<IndexResult> {
    let field = input.group.field;
    let two = Cyclotomic::rational(field, q(2));
    let dim = Cyclotomic::rational(field, q(input.character.dim as i64));
    let mut sum = Cyclotomic::zero(field);
    for (e, chi) in input.group.elements.iter().zip(&input.character.values) {
        let trace = match convention {
            TraceConvention::Fundamental => &e.trace,
            TraceConvention::Adjoint => chi,
        };
        let denom = two.sub(trace);
        if denom.is_zero() {
            return Err(Error::Rejected(format!("2 − tr({}) vanishes", e.label)));
        }
        let term = chi.sub(&dim).div(&denom)?;
        sum = sum.add(&term.scale(&q(e.multiplicity as i64)));
    }
    let sum = sum
        .to_rational()
        .ok_or_else(|| Error::Rejected(format!("character sum {sum} is not rational")))?;
    let value = q(-2) * &input.p1_integral + q(2) / q(input.group.order as i64) * sum;
    let integral = value.is_integer();
    if !integral {
        log::warn!("index {} is not an integer", format_rational(&value));
    }
    Ok(IndexResult {
        value,
        integral,
        convention,
    })
}

/// The U(1) instanton on the Eguchi-Hanson space: ℤ₂, χ(−1) = 1, dim 𝔤 = 1, p₁ = 0.
pub fn gocho_example() -> Result<IndexInput> {
    let group = cyclic_group_data(2)?;
    let character = AdjointCharacter::rational(1, &[q(1)], group.field)?;
    IndexInput::new(q(0), group, character)
}

/// The trivial flat SO(3) connection over ℂ²/ℤ₂.
pub fn trivial_so3_example() -> Result<IndexInput> {
    let group = cyclic_group_data(2)?;
    let character = AdjointCharacter::trivial(3, &group);
    IndexInput::new(q(0), group, character)
}
