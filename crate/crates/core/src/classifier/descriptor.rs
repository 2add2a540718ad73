use crate::pi1::{abelian_invariants, AbelianGroup, SurfaceGroup, Word};
use crate::surface::SurfaceType;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Homotopy type of the identity component of the embedding space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", content = "surface")]
pub enum HomotopyType {
    Point,
    Circle,
    Torus,
    SO3,
    SO3ModZ2,
    /// Unit tangent circle bundle of the host.
    UnitTangentBundle(SurfaceType),
    /// Unit tangent circle bundle of the orientation double cover, whose type is carried.
    UnitTangentBundleOfCover(SurfaceType),
    /// X is a point: the embedding space is the surface.
    SurfaceItself(SurfaceType),
}

impl HomotopyType {
    pub fn tag(&self) -> &'static str {
        match self {
            HomotopyType::Point => "Point",
            HomotopyType::Circle => "Circle",
            HomotopyType::Torus => "Torus",
            HomotopyType::SO3 => "SO3",
            HomotopyType::SO3ModZ2 => "SO3ModZ2",
            HomotopyType::UnitTangentBundle(_) => "UnitTangentBundle",
            HomotopyType::UnitTangentBundleOfCover(_) => "UnitTangentBundleOfCover",
            HomotopyType::SurfaceItself(_) => "SurfaceItself",
        }
    }

    pub fn surface(&self) -> Option<SurfaceType> {
        match self {
            HomotopyType::UnitTangentBundle(s)
            | HomotopyType::UnitTangentBundleOfCover(s)
            | HomotopyType::SurfaceItself(s) => Some(*s),
            _ => None,
        }
    }
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.surface() {
            Some(s) => write!(f, "{}({s})", self.tag()),
            None => f.write_str(self.tag()),
        }
    }
}

/// Fundamental group of a descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GroupDescription {
    Trivial,
    Integers,
    IntegersSquared,
    Cyclic { order: u64 },
    Presented {
        name: String,
        generators: Vec<String>,
        relators: Vec<Word>,
    },
}

impl GroupDescription {
    /// Generator names and relators of an equivalent presentation.
    pub fn presentation(&self) -> (Vec<String>, Vec<Word>) {
        match self {
            GroupDescription::Trivial => (Vec::new(), Vec::new()),
            GroupDescription::Integers => (vec!["z".into()], Vec::new()),
            GroupDescription::IntegersSquared => (
                vec!["a".into(), "b".into()],
                vec![Word::generator(0).commutator(&Word::generator(1))],
            ),
            GroupDescription::Cyclic { order } => (vec!["z".into()], vec![Word::generator(0).pow(*order as i64)]),
            GroupDescription::Presented {
                generators, relators, ..
            } => (generators.clone(), relators.clone()),
        }
    }

    pub fn abelianization(&self) -> AbelianGroup {
        let (gens, rels) = self.presentation();
        abelian_invariants(gens.len(), &rels)
    }
}

impl fmt::Display for GroupDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescription::Trivial => f.write_str("1"),
            GroupDescription::Integers => f.write_str("Z"),
            GroupDescription::IntegersSquared => f.write_str("Z^2"),
            GroupDescription::Cyclic { order } => write!(f, "Z/{order}"),
            GroupDescription::Presented {
                name,
                generators,
                relators,
            } => {
                let rels: Vec<String> = relators.iter().map(|r| r.display_with(generators).to_string()).collect();
                write!(f, "{name} = <{} | {}>", generators.join(", "), rels.join(", "))
            }
        }
    }
}

/// Prop 2.2 (1) lookup for `X = M`.
pub fn closed_manifold_descriptor(ty: &SurfaceType) -> Option<HomotopyType> {
    use crate::surface::NamedSurface::*;
    if !ty.is_closed() {
        return None;
    }
    Some(match ty.named() {
        Some(Sphere) | Some(ProjectivePlane) => HomotopyType::SO3,
        Some(Torus) => HomotopyType::Torus,
        Some(KleinBottle) => HomotopyType::Circle,
        _ => HomotopyType::Point,
    })
}

pub fn descriptor_fundamental_group(d: &HomotopyType) -> GroupDescription {
    match d {
        HomotopyType::Point => GroupDescription::Trivial,
        HomotopyType::Circle => GroupDescription::Integers,
        HomotopyType::Torus => GroupDescription::IntegersSquared,
        HomotopyType::SO3 => GroupDescription::Cyclic { order: 2 },
        HomotopyType::SO3ModZ2 => GroupDescription::Cyclic { order: 4 },
        HomotopyType::SurfaceItself(ty) => {
            let g = SurfaceGroup::for_surface(ty);
            GroupDescription::Presented {
                name: format!("pi1({ty})"),
                generators: g.generator_names.clone(),
                relators: g.relator.clone().into_iter().collect(),
            }
        }
        HomotopyType::UnitTangentBundle(ty) => unit_tangent_bundle_group(ty, &format!("pi1(ST({ty}))")),
        HomotopyType::UnitTangentBundleOfCover(ty) => unit_tangent_bundle_group(ty, &format!("pi1(ST(cover = {ty}))")),
    }
}

/// Fiber `z` is the last generator. Over a closed surface the Euler class
/// enters through `z^-chi`; over an open one the bundle is trivial along
/// orientation-preserving loops and `z` is inverted along the others.
fn unit_tangent_bundle_group(ty: &SurfaceType, name: &str) -> GroupDescription {
    let z_of = |n: usize| Word::generator(n);
    let mut generators: Vec<String>;
    let mut relators = Vec::new();
    let chi = ty.euler_characteristic;
    if ty.is_closed() {
        if ty.orientable {
            let g = ty.genus as usize;
            generators = (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
            let z = z_of(2 * g);
            for i in 0..2 * g {
                relators.push(z.commutator(&Word::generator(i)));
            }
            let mut r = Word::identity();
            for i in 0..g {
                r = &r * &Word::generator(2 * i).commutator(&Word::generator(2 * i + 1));
            }
            relators.push(&r * &z.pow(-chi));
        } else {
            let k = ty.genus as usize;
            generators = (1..=k).map(|i| format!("c{i}")).collect();
            let z = z_of(k);
            for i in 0..k {
                let c = Word::generator(i);
                relators.push(&(&(&c * &z) * &c.inverse()) * &z);
            }
            let mut r = Word::identity();
            for i in 0..k {
                r = &r * &Word::generator(i).pow(2);
            }
            relators.push(&r * &z.pow(-chi));
        }
    } else {
        // Free basis: crosscap loops (reversing) then boundary loops.
        let rank = (1 - chi) as usize;
        let reversing = if ty.orientable { 0 } else { ty.genus as usize };
        generators = (1..=rank).map(|i| format!("x{i}")).collect();
        let z = z_of(rank);
        for i in 0..rank {
            let x = Word::generator(i);
            if i < reversing {
                relators.push(&(&(&x * &z) * &x.inverse()) * &z);
            } else {
                relators.push(x.commutator(&z));
            }
        }
    }
    generators.push("z".into());
    GroupDescription::Presented {
        name: name.to_string(),
        generators,
        relators,
    }
}
