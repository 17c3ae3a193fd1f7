//! Simplicial complexes, Stanley–Reisner ideals and vertex decompositions.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::parse::is_valid_variable_name;
use crate::ring::PolynomialRing;

const MAX_VERTICES: usize = 20;

/// A complex given by its facets over a named vertex set. Faces are bitmasks
/// over vertex positions. Vertices in no facet are allowed and contribute
/// their variable to the Stanley–Reisner ideal. The facet list `[∅]` is the
/// empty complex; an empty facet list (the void complex) is rejected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexSpec {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl TryFrom<ComplexSpec> for SimplicialComplex {
    type Error = Error;
    fn try_from(spec: ComplexSpec) -> Result<Self> {
        Self::new(spec.vertices, &spec.facets)
    }
}

impl From<&SimplicialComplex> for ComplexSpec {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexSpec {
            vertices: c.vertices.clone(),
            facets: c.facets.iter().map(|&f| c.face_names(f)).collect(),
        }
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexSpec::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = ComplexSpec::deserialize(d)?;
        Self::try_from(spec).map_err(serde::de::Error::custom)
    }
}

/// Keeps the inclusion-maximal masks, sorted.
fn maximal(mut faces: Vec<u32>) -> Vec<u32> {
    faces.sort_unstable();
    faces.dedup();
    let keep: Vec<u32> = faces
        .iter()
        .copied()
        .filter(|&f| !faces.iter().any(|&g| g != f && g & f == f))
        .collect();
    keep
}

impl SimplicialComplex {
    pub fn new<S: AsRef<str>>(vertices: Vec<String>, facets: &[Vec<S>]) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::InvalidComplex(format!(
                "at most {MAX_VERTICES} vertices are supported"
            )));
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidComplex(format!("duplicate vertex `{v}`")));
            }
        }
        if facets.is_empty() {
            return Err(Error::InvalidComplex(
                "the void complex has no facets".into(),
            ));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut mask = 0u32;
            for name in facet {
                let i = vertices
                    .iter()
                    .position(|v| v == name.as_ref())
                    .ok_or_else(|| {
                        Error::InvalidComplex(format!("unknown vertex `{}`", name.as_ref()))
                    })?;
                mask |= 1 << i;
            }
            masks.push(mask);
        }
        let before = masks.len();
        let facets = maximal(masks);
        if facets.len() != before {
            return Err(Error::InvalidComplex(
                "facet list contains repeated or nested faces".into(),
            ));
        }
        Ok(Self { vertices, facets })
    }

    /// Builds from masks, re-minimizing the facet list.
    fn from_masks(vertices: Vec<String>, faces: Vec<u32>) -> Self {
        Self {
            vertices,
            facets: maximal(faces),
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: Vec<String>) -> Result<Self> {
        let all = vertices.clone();
        Self::new(vertices, &[all])
    }

    /// Complex with vertices `1..=n` named `x1..xn` and the listed facets, given 1-based.
    pub fn from_indexed(n: usize, facets: &[&[usize]]) -> Result<Self> {
        let vertices: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let facets: Vec<Vec<String>> = facets
            .iter()
            .map(|f| f.iter().map(|&i| format!("x{i}")).collect())
            .collect();
        Self::new(vertices, &facets)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facet_masks(&self) -> &[u32] {
        &self.facets
    }

    pub fn facets(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|&f| self.face_names(f)).collect()
    }

    fn face_names(&self, mask: u32) -> Vec<String> {
        (0..self.vertices.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.vertices[i].clone())
            .collect()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::InvalidComplex(format!("unknown vertex `{name}`")))
    }

    /// Dimension of the largest facet; `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].count_ones();
        self.facets.iter().all(|f| f.count_ones() == d)
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn contains_face(&self, mask: u32) -> bool {
        self.facets.iter().any(|&f| f & mask == mask)
    }

    /// Lies in every facet.
    pub fn is_cone_point(&self, v: usize) -> bool {
        self.facets.iter().all(|f| f >> v & 1 == 1)
    }

    /// Positions in the vertex list with `v` removed.
    fn drop_bit(mask: u32, v: usize) -> u32 {
        let low = mask & ((1 << v) - 1);
        let high = (mask >> (v + 1)) << v;
        low | high
    }

    fn remaining_vertices(&self, v: usize) -> Vec<String> {
        let mut vs = self.vertices.clone();
        vs.remove(v);
        vs
    }

    /// `lk(v)` on the vertex set without `v`.
    pub fn link(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let faces: Vec<u32> = self
            .facets
            .iter()
            .filter(|f| *f >> v & 1 == 1)
            .map(|&f| Self::drop_bit(f & !(1 << v), v))
            .collect();
        if faces.is_empty() {
            return Err(Error::InvalidComplex(format!(
                "vertex `{}` lies in no face, so its link is void",
                self.vertices[v]
            )));
        }
        Ok(Self::from_masks(self.remaining_vertices(v), faces))
    }

    /// `del(v)` on the vertex set without `v`.
    pub fn deletion(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let faces: Vec<u32> = self
            .facets
            .iter()
            .map(|&f| Self::drop_bit(f & !(1 << v), v))
            .collect();
        Ok(Self::from_masks(self.remaining_vertices(v), faces))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertices.len() {
            return Err(Error::InvalidComplex(format!(
                "vertex index {v} out of range"
            )));
        }
        Ok(())
    }

    /// No facet of the link is a facet of the deletion.
    pub fn is_shedding(&self, v: usize) -> Result<bool> {
        if self.facets.iter().all(|f| f >> v & 1 == 0) {
            return Ok(false);
        }
        let lk = self.link(v)?;
        let del = self.deletion(v)?;
        Ok(!lk.facets.iter().any(|f| del.facets.contains(f)))
    }

    /// Ring variable for each vertex: the name itself when it is a valid
    /// identifier, otherwise the name prefixed with `x`.
    pub fn ring(&self) -> Result<PolynomialRing> {
        let names = self
            .vertices
            .iter()
            .map(|v| {
                if is_valid_variable_name(v) {
                    Ok(v.clone())
                } else if is_valid_variable_name(&format!("x{v}")) {
                    Ok(format!("x{v}"))
                } else {
                    Err(Error::InvalidComplex(format!(
                        "vertex `{v}` cannot name a variable"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        PolynomialRing::new(names).map_err(|e| Error::InvalidComplex(e.to_string()))
    }

    /// Inclusion-minimal non-faces, as masks.
    pub fn minimal_nonfaces(&self) -> Vec<u32> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << n) {
            if self.contains_face(mask) {
                continue;
            }
            let minimal = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .all(|i| self.contains_face(mask & !(1 << i)));
            if minimal {
                out.push(mask);
            }
        }
        out
    }
}

/// `⟨x_F : F a minimal non-face⟩` in the vertex ring.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<Ideal> {
    let ring = complex.ring()?;
    let n = ring.len();
    let monomials: Vec<Monomial> = complex
        .minimal_nonfaces()
        .into_iter()
        .map(|mask| Monomial::from_exponents((0..n).map(|i| mask >> i & 1).collect()))
        .collect();
    Ok(Ideal::from_monomials(&ring, &monomials))
}

/// A vertex decomposition: each node records its complex and how it splits.
#[derive(Clone, Debug, Serialize)]
pub struct VdTrace {
    pub complex: SimplicialComplex,
    #[serde(flatten)]
    pub step: VdStep,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum VdStep {
    Simplex,
    /// Every facet contains the vertex; the link is the base of the cone.
    Cone {
        vertex: String,
        link: Box<VdTrace>,
    },
    Shed {
        vertex: String,
        deletion: Box<VdTrace>,
        link: Box<VdTrace>,
    },
}

impl VdTrace {
    pub fn depth(&self) -> usize {
        match &self.step {
            VdStep::Simplex => 0,
            VdStep::Cone { link, .. } => 1 + link.depth(),
            VdStep::Shed { deletion, link, .. } => 1 + deletion.depth().max(link.depth()),
        }
    }
}

type Memo = HashMap<SimplicialComplex, Option<VdTrace>>;

fn decompose(complex: &SimplicialComplex, memo: &mut Memo) -> Result<Option<VdTrace>> {
    if let Some(hit) = memo.get(complex) {
        return Ok(hit.clone());
    }
    let found = if complex.is_simplex() {
        Some(VdTrace {
            complex: complex.clone(),
            step: VdStep::Simplex,
        })
    } else {
        search(complex, memo)?
    };
    memo.insert(complex.clone(), found.clone());
    Ok(found)
}

fn search(complex: &SimplicialComplex, memo: &mut Memo) -> Result<Option<VdTrace>> {
    let n = complex.vertices.len();
    for v in 0..n {
        if complex.is_cone_point(v) {
            let Some(link) = decompose(&complex.link(v)?, memo)? else {
                return Ok(None);
            };
            return Ok(Some(VdTrace {
                complex: complex.clone(),
                step: VdStep::Cone {
                    vertex: complex.vertices[v].clone(),
                    link: Box::new(link),
                },
            }));
        }
    }
    for v in 0..n {
        if !complex.is_shedding(v)? {
            continue;
        }
        let Some(deletion) = decompose(&complex.deletion(v)?, memo)? else {
            continue;
        };
        let Some(link) = decompose(&complex.link(v)?, memo)? else {
            continue;
        };
        return Ok(Some(VdTrace {
            complex: complex.clone(),
            step: VdStep::Shed {
                vertex: complex.vertices[v].clone(),
                deletion: Box::new(deletion),
                link: Box::new(link),
            },
        }));
    }
    Ok(None)
}

/// Searches for a vertex decomposition of a pure complex. `Ok(None)` means
/// the exhaustive search found none.
pub fn is_vertex_decomposable_pure(complex: &SimplicialComplex) -> Result<Option<VdTrace>> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    decompose(complex, &mut HashMap::new())
}

fn invalid(message: &str) -> Error {
    Error::InvalidArgument(format!("invalid decomposition trace: {message}"))
}

/// Regularity of `R/I_Δ` from a trace: simplices give 0, a cone has the
/// regularity of its base, and a shedding vertex gives
/// `max(reg del, reg lk + 1)`. Each step is re-checked against its complex.
pub fn reg_via_vd_recursion(complex: &SimplicialComplex, trace: &VdTrace) -> Result<i64> {
    if &trace.complex != complex {
        return Err(invalid("complex mismatch"));
    }
    match &trace.step {
        VdStep::Simplex => {
            if !complex.is_simplex() {
                return Err(invalid("not a simplex"));
            }
            Ok(0)
        }
        VdStep::Cone { vertex, link } => {
            let v = complex.vertex_index(vertex)?;
            if !complex.is_cone_point(v) {
                return Err(invalid("cone vertex misses a facet"));
            }
            reg_via_vd_recursion(&complex.link(v)?, link)
        }
        VdStep::Shed {
            vertex,
            deletion,
            link,
        } => {
            let v = complex.vertex_index(vertex)?;
            if !complex.is_shedding(v)? {
                return Err(invalid("vertex does not shed"));
            }
            let d = reg_via_vd_recursion(&complex.deletion(v)?, deletion)?;
            let l = reg_via_vd_recursion(&complex.link(v)?, link)?;
            Ok(d.max(l + 1))
        }
    }
}

/// The six-vertex triangulation of the real projective plane.
pub fn rp2_six_vertex() -> SimplicialComplex {
    SimplicialComplex::from_indexed(
        6,
        &[
            &[1, 2, 4],
            &[1, 2, 6],
            &[1, 3, 5],
            &[1, 3, 6],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 5, 6],
            &[3, 4, 6],
            &[4, 5, 6],
        ],
    )
    .expect("valid complex")
}
