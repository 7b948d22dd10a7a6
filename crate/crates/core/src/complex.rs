//! Abstract simplicial complexes on the vertex set `{1, …, n}`, stored by facets.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::bits;
use crate::code::{maximal_sets, Code, MAX_ENUM_SUPPORT, MAX_LEN};
use crate::cover::Cover;
use crate::error::{Error, Result};

/// A downward-closed family of subsets of `{1, …, n}`.
///
/// Only the inclusion-maximal faces are kept. The void complex has no
/// facets at all; the complex whose only face is `∅` has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// The complex generated by `faces` (their downward closure).
    ///
    /// Fails with `CapacityExceeded` when a facet has more than
    /// [`MAX_ENUM_SUPPORT`] vertices, since face enumeration is exponential
    /// in facet size.
    pub fn from_facets<I: IntoIterator<Item = u64>>(n: usize, faces: I) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                value: n,
                limit: MAX_LEN,
            });
        }
        let full = bits::full(n);
        let mut all = Vec::new();
        for f in faces {
            if f & !full != 0 {
                let index = 64 - f.leading_zeros() as usize;
                return Err(Error::IndexOutOfRange { index, n });
            }
            if bits::size(f) > MAX_ENUM_SUPPORT {
                return Err(Error::CapacityExceeded {
                    what: "facet size",
                    value: bits::size(f),
                    limit: MAX_ENUM_SUPPORT,
                });
            }
            all.push(f);
        }
        Ok(SimplicialComplex {
            n,
            facets: maximal_sets(all),
        })
    }

    pub fn from_facet_lists(n: usize, faces: &[&[usize]]) -> Result<Self> {
        for &i in faces.iter().flat_map(|f| f.iter()) {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
        }
        Self::from_facets(n, faces.iter().map(|f| bits::mask_of(f.iter().copied())))
    }

    /// The complex with no faces at all.
    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `{1, …, n}`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_facets(n, [bits::full(n)])
    }

    pub fn vertex_capacity(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Facets sorted by size, then lexicographically.
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| bits::index_vec(f)).collect()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    pub fn contains_indices(&self, face: &[usize]) -> bool {
        face.iter().all(|&i| (1..=64).contains(&i))
            && self.contains(bits::mask_of(face.iter().copied()))
    }

    pub fn vertex_mask(&self) -> u64 {
        self.facets.iter().fold(0, |acc, &f| acc | f)
    }

    pub fn vertices(&self) -> Vec<usize> {
        bits::index_vec(self.vertex_mask())
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        (1..=64).contains(&v) && self.vertex_mask() & bits::bit(v) != 0
    }

    /// `None` for the void complex and for `{∅}`.
    pub fn dimension(&self) -> Option<usize> {
        self.facets
            .iter()
            .map(|&f| bits::size(f))
            .max()
            .and_then(|s| s.checked_sub(1))
    }

    /// Faces of dimension `dim` (with `dim + 1` vertices), lexicographically sorted.
    pub fn faces_of_dim(&self, dim: usize) -> Vec<u64> {
        let k = dim + 1;
        let mut set = BTreeSet::new();
        for &f in &self.facets {
            if bits::size(f) >= k {
                let idx = bits::index_vec(f);
                push_combinations(&idx, k, &mut set);
            }
        }
        let mut faces: Vec<u64> = set.into_iter().collect();
        faces.sort_by(|a, b| bits::lex_cmp(*a, *b));
        faces
    }

    /// Every face including `∅`, sorted by size then lexicographically.
    pub fn faces(&self) -> Vec<u64> {
        if self.is_void() {
            return Vec::new();
        }
        let mut out = vec![0];
        if let Some(d) = self.dimension() {
            for k in 0..=d {
                out.extend(self.faces_of_dim(k));
            }
        }
        out
    }

    pub fn f_vector(&self) -> FVector {
        let counts = match self.dimension() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.faces_of_dim(k).len()).collect(),
        };
        FVector(counts)
    }

    /// Alternating face count; the empty face is not counted.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Facets one per line as ascending comma-separated indices; `∅` is `{}`.
    pub fn render_facets(&self) -> String {
        let mut out = String::new();
        for &f in &self.facets {
            out.push_str(&bits::render_indices(f));
            out.push('\n');
        }
        out
    }
}

fn push_combinations(items: &[usize], k: usize, out: &mut BTreeSet<u64>) {
    fn rec(items: &[usize], k: usize, start: usize, acc: u64, out: &mut BTreeSet<u64>) {
        if k == 0 {
            out.insert(acc);
            return;
        }
        for i in start..=items.len() - k {
            rec(items, k - 1, i + 1, acc | bits::bit(items[i]), out);
        }
    }
    if k <= items.len() {
        rec(items, k, 0, 0, out);
    }
}

/// Face counts `(f₀, f₁, …, f_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `Δ(C)`: faces are the supports of the simplicial completion of `code`.
///
/// The completion is never materialized; the facets are the maximal supports.
pub fn delta_complex(code: &Code) -> Result<SimplicialComplex> {
    SimplicialComplex::from_facets(code.len(), code.maximal_supports())
}

/// The nerve of a cover: `σ` is a face iff `σ = ∅` or `∩_{i∈σ} U_i ≠ ∅`.
///
/// Computed straight from the definition by a depth-first search over index
/// sets in increasing order, carrying the running intersection.
pub fn nerve(cover: &Cover) -> Result<SimplicialComplex> {
    let n = cover.set_count();
    let mut leaves = Vec::new();
    let mut all = FixedBitSet::with_capacity(cover.ground_size());
    all.insert_range(..);
    extend_nerve(cover, 0, 0, &all, &mut leaves)?;
    SimplicialComplex::from_facets(n, leaves)
}

fn extend_nerve(
    cover: &Cover,
    start: usize,
    face: u64,
    inter: &FixedBitSet,
    leaves: &mut Vec<u64>,
) -> Result<()> {
    let mut extended = false;
    for i in start..cover.set_count() {
        let mut next = inter.clone();
        next.intersect_with(cover.point_set(i + 1));
        if next.is_clear() {
            continue;
        }
        let child = face | 1 << i;
        if bits::size(child) > MAX_ENUM_SUPPORT {
            return Err(Error::CapacityExceeded {
                what: "facet size",
                value: bits::size(child),
                limit: MAX_ENUM_SUPPORT,
            });
        }
        extended = true;
        extend_nerve(cover, i + 1, child, &next, leaves)?;
    }
    if !extended {
        leaves.push(face);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_code;

    fn code(words: &[&str]) -> Code {
        let text: String = words.iter().map(|w| format!("{w}\n")).collect();
        parse_code(&text).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(3, &[&[1, 2], &[1, 3], &[2, 3]]).unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
            .unwrap()
    }

    #[test]
    fn delta_examples() {
        let k = delta_complex(&code(&["100", "010", "001", "110", "101", "011"])).unwrap();
        assert_eq!(k.facet_lists(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);

        let z = delta_complex(&code(&["000"])).unwrap();
        assert_eq!(z.facets(), &[0]);
        assert_eq!(z.faces(), vec![0]);

        let e = delta_complex(&code(&["110"])).unwrap();
        assert_eq!(e.facet_lists(), vec![vec![1, 2]]);
        assert!(e.contains_indices(&[1]));
    }

    #[test]
    fn delta_of_empty_code_is_void() {
        let k = delta_complex(&Code::new(3, []).unwrap()).unwrap();
        assert!(k.is_void());
        assert!(k.faces().is_empty());
        assert!(k.f_vector().counts().is_empty());
    }

    #[test]
    fn nerve_examples() {
        let c = Cover::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(nerve(&c).unwrap(), hollow_triangle());

        let c = Cover::new(1, vec![vec![], vec![1]]).unwrap();
        let k = nerve(&c).unwrap();
        assert_eq!(k.vertices(), [2]);
        assert_eq!(k.facet_lists(), vec![vec![2]]);

        let c = Cover::new(4, vec![vec![2, 4]]).unwrap();
        assert_eq!(nerve(&c).unwrap().f_vector(), FVector(vec![1]));
    }

    #[test]
    fn nerve_of_empty_sets_is_empty_face_only() {
        let c = Cover::new(3, vec![vec![], vec![]]).unwrap();
        assert_eq!(nerve(&c).unwrap().facets(), &[0]);
    }

    #[test]
    fn facet_examples() {
        assert_eq!(
            hollow_triangle().facet_lists(),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(
            SimplicialComplex::simplex(3).unwrap().facet_lists(),
            vec![vec![1, 2, 3]]
        );
        let e = SimplicialComplex::from_facets(3, [0]).unwrap();
        assert_eq!(e.facet_lists(), vec![Vec::<usize>::new()]);
        assert_eq!(e.render_facets(), "{}\n");
    }

    #[test]
    fn non_maximal_generators_are_dropped() {
        let k = SimplicialComplex::from_facet_lists(3, &[&[1], &[1, 2], &[2], &[3]]).unwrap();
        assert_eq!(k.facet_lists(), vec![vec![3], vec![1, 2]]);
    }

    #[test]
    fn f_vector_examples() {
        assert_eq!(hollow_triangle().f_vector(), FVector(vec![3, 3]));
        assert_eq!(tetra_boundary().f_vector(), FVector(vec![4, 6, 4]));
        let v = SimplicialComplex::from_facet_lists(1, &[&[1]]).unwrap();
        assert_eq!(v.f_vector(), FVector(vec![1]));
        assert_eq!(tetra_boundary().f_vector().to_string(), "(4,6,4)");
    }

    #[test]
    fn euler_examples() {
        assert_eq!(hollow_triangle().euler_characteristic(), 0);
        assert_eq!(tetra_boundary().euler_characteristic(), 2);
        let v = SimplicialComplex::from_facet_lists(1, &[&[1]]).unwrap();
        assert_eq!(v.euler_characteristic(), 1);
    }

    #[test]
    fn oversized_facets_rejected() {
        assert!(matches!(
            SimplicialComplex::simplex(25),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(SimplicialComplex::simplex(24).is_ok());
    }

    #[test]
    fn faces_are_sorted_and_closed() {
        let k = tetra_boundary();
        let faces = k.faces();
        assert_eq!(faces.len(), 1 + 4 + 6 + 4);
        for &f in &faces {
            for s in bits::submasks(f) {
                assert!(k.contains(s));
            }
        }
        assert_eq!(
            k.faces_of_dim(1)
                .into_iter()
                .map(bits::index_vec)
                .collect::<Vec<_>>(),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
    }
}
