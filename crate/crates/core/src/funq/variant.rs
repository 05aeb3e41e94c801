use std::fmt;
use std::str::FromStr;

use crate::scalar::{
    structure_fn, DualCoeff, GaussRational, JAssign, JLaurent, JMonomial, JSeries, StructureFn,
};

/// Which rotation generator is primitive in the dual algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Primitive {
    X01,
    X02,
    X12,
}

impl Primitive {
    pub const ALL: [Primitive; 3] = [Primitive::X02, Primitive::X12, Primitive::X01];

    /// Contraction multiplier `J_{μν}` of the generator.
    pub fn multiplier(self) -> JMonomial {
        match self {
            Primitive::X01 => (1, 0),
            Primitive::X02 => (1, 1),
            Primitive::X12 => (0, 1),
        }
    }

    /// Index in the so alphabet `X01 < X02 < X12`.
    pub fn index(self) -> u8 {
        match self {
            Primitive::X01 => 0,
            Primitive::X02 => 1,
            Primitive::X12 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Primitive::X01 => "X01",
            Primitive::X02 => "X02",
            Primitive::X12 => "X12",
        }
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Primitive {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "X01" | "x01" => Ok(Primitive::X01),
            "X02" | "x02" => Ok(Primitive::X02),
            "X12" | "x12" => Ok(Primitive::X12),
            _ => Err(format!("unknown primitive generator `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    V02,
    V12,
    V01,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::V02, Variant::V12, Variant::V01];

    pub fn name(self) -> &'static str {
        match self {
            Variant::V02 => "v02",
            Variant::V12 => "v12",
            Variant::V01 => "v01",
        }
    }

    pub fn spec(self) -> VariantSpec {
        VariantSpec::new(self)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "v02" => Ok(Variant::V02),
            "v12" => Ok(Variant::V12),
            "v01" => Ok(Variant::V01),
            _ => Err(format!("unknown variant `{s}` (use v02, v12 or v01)")),
        }
    }
}

/// Coupling between the Hopf structure and the Cayley-Klein contraction.
///
/// The group is obtained from the standard one by `ã₁ = a₁`, `ã₂ = α a₂`,
/// `b̃_k = β_k b_k`, `z̃ = J z`; the algebra by `H̃ = H/J`, `ũ_k = u_k/γ_k`.
/// All entries are j-monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariantSpec {
    pub variant: Variant,
    pub primitive: Primitive,
    /// Deformation multiplier J (equal to the scaling of the primitive).
    pub mult: JMonomial,
    pub alpha: JMonomial,
    pub beta: [JMonomial; 2],
    pub gamma: [JMonomial; 2],
}

impl VariantSpec {
    pub fn new(variant: Variant) -> Self {
        let (primitive, beta) = match variant {
            Variant::V02 => (Primitive::X02, [(1, 0), (0, 1)]),
            Variant::V12 => (Primitive::X12, [(1, 0), (1, 1)]),
            Variant::V01 => (Primitive::X01, [(1, 1), (0, 1)]),
        };
        let mult = primitive.multiplier();
        VariantSpec { variant, primitive, mult, alpha: mult, beta, gamma: beta }
    }

    pub fn j_of(&self, m: JMonomial) -> JLaurent {
        JLaurent::monomial(m)
    }

    pub fn mult_l(&self) -> JLaurent {
        JLaurent::monomial(self.mult)
    }

    pub fn mult_at(&self, j: &JAssign) -> DualCoeff {
        self.mult_l().specialize(j).expect("monomials with nonnegative exponents always specialize")
    }

    /// Whether the deformation parameter is rescaled at `j` (J ≠ 1).
    pub fn parameter_rescaled(&self, j: &JAssign) -> bool {
        !self.mult_at(j).is_one()
    }

    /// Symbolic `f(s J z)` (or `sinh(s J z)/J` for `Sinhc`).
    pub fn sf(&self, kind: StructureFn, scale: GaussRational, order: usize) -> JSeries {
        structure_fn(kind, &scale, &self.mult_l(), order)
    }
}

pub(crate) fn mono(m: JMonomial) -> JLaurent {
    JLaurent::monomial(m)
}

pub(crate) fn mono_inv(m: JMonomial) -> JLaurent {
    JLaurent::monomial((-m.0, -m.1))
}

