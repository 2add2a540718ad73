use super::{SimplicialSurface, TriangleId};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

/// Topological type of a compact connected surface.
///
/// `genus` is the orientable genus for orientable surfaces and the number of
/// cross-caps otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceType {
    pub orientable: bool,
    pub genus: u32,
    pub boundary_components: u32,
    pub euler_characteristic: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedSurface {
    Sphere,
    Disk,
    Annulus,
    MobiusBand,
    Torus,
    KleinBottle,
    ProjectivePlane,
}

impl SurfaceType {
    pub fn new(orientable: bool, genus: u32, boundary_components: u32) -> SurfaceType {
        let b = i64::from(boundary_components);
        let g = i64::from(genus);
        let euler_characteristic = if orientable { 2 - 2 * g - b } else { 2 - g - b };
        SurfaceType {
            orientable,
            genus,
            boundary_components,
            euler_characteristic,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_components == 0
    }

    pub fn named(&self) -> Option<NamedSurface> {
        use NamedSurface::*;
        match (self.orientable, self.genus, self.boundary_components) {
            (true, 0, 0) => Some(Sphere),
            (true, 0, 1) => Some(Disk),
            (true, 0, 2) => Some(Annulus),
            (false, 1, 1) => Some(MobiusBand),
            (true, 1, 0) => Some(Torus),
            (false, 2, 0) => Some(KleinBottle),
            (false, 1, 0) => Some(ProjectivePlane),
            _ => None,
        }
    }

    pub fn is(&self, name: NamedSurface) -> bool {
        self.named() == Some(name)
    }

    /// True when the type satisfies its Euler characteristic formula.
    pub fn is_consistent(&self) -> bool {
        *self == SurfaceType::new(self.orientable, self.genus, self.boundary_components)
            && (self.orientable || self.genus >= 1)
    }
}

impl fmt::Display for NamedSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NamedSurface::Sphere => "Sphere",
            NamedSurface::Disk => "Disk",
            NamedSurface::Annulus => "Annulus",
            NamedSurface::MobiusBand => "MobiusBand",
            NamedSurface::Torus => "Torus",
            NamedSurface::KleinBottle => "KleinBottle",
            NamedSurface::ProjectivePlane => "ProjectivePlane",
        };
        f.write_str(s)
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.named() {
            Some(name) => name.to_string(),
            None if self.orientable => format!("orientable genus {} surface", self.genus),
            None => format!("nonorientable genus {} surface", self.genus),
        };
        match (self.named(), self.boundary_components) {
            (Some(_), b) if b > 0 => write!(f, "interior of {base}"),
            (_, 0) => f.write_str(&base),
            (_, b) => write!(f, "interior of {base} with {b} boundary circles"),
        }
    }
}

/// Breadth-first coherent orientation of the dual graph.
///
/// Returns, for each triangle, whether its stored vertex order must be
/// reversed; `None` if some dual cycle flips orientation.
pub fn coherent_orientation(s: &SimplicialSurface) -> Option<Vec<bool>> {
    let n = s.triangle_count();
    let mut sign: Vec<i8> = vec![0; n];
    sign[0] = 1;
    let mut queue = VecDeque::from([0 as TriangleId]);
    while let Some(t) = queue.pop_front() {
        for e in s.triangle_edges(t) {
            if let Some(u) = s.across(t, e) {
                let induced = sign[t] * s.transport_sign(t, u, e);
                if sign[u] == 0 {
                    sign[u] = induced;
                    queue.push_back(u);
                } else if sign[u] != induced {
                    return None;
                }
            }
        }
    }
    Some(sign.into_iter().map(|x| x < 0).collect())
}

fn boundary_cycle_count(s: &SimplicialSurface) -> u32 {
    let boundary: Vec<usize> = s.boundary_edges().collect();
    let mut visited = vec![false; s.edge_count()];
    let mut cycles = 0;
    for &start in &boundary {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut stack = vec![start];
        visited[start] = true;
        while let Some(e) = stack.pop() {
            for v in s.edge(e) {
                for &w in s.neighbors(v) {
                    let f = s.edge_between(v, w).unwrap();
                    if s.is_boundary_edge(f) && !visited[f] {
                        visited[f] = true;
                        stack.push(f);
                    }
                }
            }
        }
    }
    cycles
}

/// Orientability by coherent orientation, boundary circles by tracing
/// boundary edges, genus solved from the Euler characteristic.
pub fn classify_surface(s: &SimplicialSurface) -> SurfaceType {
    let orientable = coherent_orientation(s).is_some();
    let boundary_components = boundary_cycle_count(s);
    let chi = s.euler_characteristic();
    let b = i64::from(boundary_components);
    let genus = if orientable { (2 - b - chi) / 2 } else { 2 - b - chi };
    let ty = SurfaceType {
        orientable,
        genus: genus as u32,
        boundary_components,
        euler_characteristic: chi,
    };
    debug_assert!(ty.is_consistent(), "inconsistent surface type {ty:?}");
    ty
}
