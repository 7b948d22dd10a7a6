//! Invariants of simplicial complexes: F₂ homology, components, the
//! edge-path presentation of π₁, edge paths, and the Helly dimension bound.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::bits;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Dense matrix over F₂ with bit-packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        Gf2Matrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let w = &mut self.data[r * self.stride + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.stride + c / 64] ^= 1 << (c % 64);
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Rank by Gaussian elimination on the bit rows.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let (word, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][word] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[word] & bit != 0 {
                    row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    pub fn mul(&self, rhs: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes");
        let mut out = Gf2Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    let src = rhs.row(k).to_vec();
                    let dst = &mut out.data[r * out.stride..(r + 1) * out.stride];
                    dst.iter_mut().zip(&src).for_each(|(a, b)| *a ^= b);
                }
            }
        }
        out
    }
}

/// Matrix of `∂_dim`: rows are the `(dim-1)`-faces, columns the `dim`-faces,
/// both in lexicographic order. `∂₀` maps into the zero space and has no rows.
pub fn boundary_matrix(k: &SimplicialComplex, dim: usize) -> Gf2Matrix {
    let cols = k.faces_of_dim(dim);
    if dim == 0 {
        return Gf2Matrix::zeros(0, cols.len());
    }
    let rows = k.faces_of_dim(dim - 1);
    let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = Gf2Matrix::zeros(rows.len(), cols.len());
    for (c, &face) in cols.iter().enumerate() {
        for v in bits::indices(face) {
            m.set(index[&(face & !bits::bit(v))], c, true);
        }
    }
    m
}

pub fn boundary_rank(k: &SimplicialComplex, dim: usize) -> usize {
    if dim == 0 {
        return 0;
    }
    boundary_matrix(k, dim).rank()
}

/// Unreduced Betti numbers over F₂.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(k, b)| format!("b{k}={b}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `β_k = f_k − rank ∂_k − rank ∂_{k+1}` for `0 ≤ k ≤ kmax`.
pub fn betti_numbers(k: &SimplicialComplex, kmax: usize) -> BettiVector {
    let ranks: Vec<usize> = (0..=kmax + 1).map(|d| boundary_rank(k, d)).collect();
    BettiVector(
        (0..=kmax)
            .map(|d| k.faces_of_dim(d).len() - ranks[d] - ranks[d + 1])
            .collect(),
    )
}

/// Betti numbers up to the dimension of the complex (at least `β₀`).
pub fn betti_default(k: &SimplicialComplex) -> BettiVector {
    betti_numbers(k, k.dimension().unwrap_or(0))
}

fn adjacency(k: &SimplicialComplex) -> HashMap<usize, Vec<usize>> {
    let mut adj: HashMap<usize, Vec<usize>> =
        k.vertices().into_iter().map(|v| (v, Vec::new())).collect();
    for e in k.faces_of_dim(1) {
        let ij = bits::index_vec(e);
        adj.get_mut(&ij[0]).unwrap().push(ij[1]);
        adj.get_mut(&ij[1]).unwrap().push(ij[0]);
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    adj
}

/// Breadth-first search with ascending-index tie-breaking. Returns the parent
/// of each reached vertex (the root maps to itself) and the visiting order.
fn bfs(adj: &HashMap<usize, Vec<usize>>, root: usize) -> (HashMap<usize, usize>, Vec<usize>) {
    let mut parent = HashMap::from([(root, root)]);
    let mut order = vec![root];
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[&u] {
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(w) {
                e.insert(u);
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    (parent, order)
}

/// Vertex classes of the 1-skeleton, each sorted, ordered by smallest vertex.
pub fn connected_components(k: &SimplicialComplex) -> Vec<Vec<usize>> {
    let adj = adjacency(k);
    let mut seen = 0u64;
    let mut out = Vec::new();
    for v in k.vertices() {
        if seen & bits::bit(v) != 0 {
            continue;
        }
        let (_, mut comp) = bfs(&adj, v);
        comp.sort_unstable();
        seen |= bits::mask_of(comp.iter().copied());
        out.push(comp);
    }
    out
}

/// A generator `g_k` or its inverse. `generator` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "g{}^-1", self.generator)
        } else {
            write!(f, "g{}", self.generator)
        }
    }
}

/// Edge-path presentation of `π₁(K, basepoint)`.
///
/// Generator `g_k` is the `k`-th non-tree edge `(i, j)`, `i < j`, oriented
/// from `i` to `j`. Each 2-face `{a < b < c}` contributes the word read
/// along `a → b → c → a`, with tree edges dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1Presentation {
    pub basepoint: usize,
    pub generators: Vec<(usize, usize)>,
    pub relations: Vec<Vec<Letter>>,
}

impl Pi1Presentation {
    pub fn render(&self) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|(i, j)| format!("e({i},{j})"))
            .collect();
        let mut out = if gens.is_empty() {
            "generators:\n".to_string()
        } else {
            format!("generators: {}\n", gens.join(", "))
        };
        out.push_str("relations:\n");
        for r in &self.relations {
            out.push_str(&render_word(r));
            out.push('\n');
        }
        out
    }
}

/// Letters joined by `*`; the empty word is `1`.
pub fn render_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let parts: Vec<String> = word.iter().map(|l| l.to_string()).collect();
    parts.join("*")
}

impl fmt::Display for Pi1Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn pi1_presentation(k: &SimplicialComplex, basepoint: usize) -> Result<Pi1Presentation> {
    if !k.has_vertex(basepoint) {
        return Err(Error::MissingBasepoint { vertex: basepoint });
    }
    let adj = adjacency(k);
    let (parent, order) = bfs(&adj, basepoint);
    if order.len() != adj.len() {
        return Err(Error::Disconnected);
    }
    let is_tree = |i: usize, j: usize| {
        (j != basepoint && parent[&j] == i) || (i != basepoint && parent[&i] == j)
    };

    let mut generators = Vec::new();
    let mut gen_index: HashMap<(usize, usize), usize> = HashMap::new();
    for e in k.faces_of_dim(1) {
        let ij = bits::index_vec(e);
        let (i, j) = (ij[0], ij[1]);
        if !is_tree(i, j) {
            generators.push((i, j));
            gen_index.insert((i, j), generators.len());
        }
    }

    let letter = |from: usize, to: usize| -> Option<Letter> {
        let (i, j, inverse) = if from < to {
            (from, to, false)
        } else {
            (to, from, true)
        };
        gen_index
            .get(&(i, j))
            .map(|&generator| Letter { generator, inverse })
    };
    let relations = k
        .faces_of_dim(2)
        .into_iter()
        .map(|t| {
            let v = bits::index_vec(t);
            [(v[0], v[1]), (v[1], v[2]), (v[2], v[0])]
                .into_iter()
                .filter_map(|(a, b)| letter(a, b))
                .collect()
        })
        .collect();

    Ok(Pi1Presentation {
        basepoint,
        generators,
        relations,
    })
}

/// Minimal non-faces on the vertex set: sets that are not faces although
/// every proper subset is. Sorted by size, then lexicographically.
pub fn minimal_non_faces(k: &SimplicialComplex) -> Vec<u64> {
    if k.is_void() {
        return vec![0];
    }
    let vertices = k.vertices();
    let mut out = Vec::new();
    // Each minimal non-face is a face plus one vertex above its largest index.
    for face in k.faces() {
        let top = bits::indices(face).last().unwrap_or(0);
        for &v in vertices.iter().filter(|&&v| v > top) {
            let cand = face | bits::bit(v);
            if !k.contains(cand) && bits::indices(cand).all(|i| k.contains(cand & !bits::bit(i))) {
                out.push(cand);
            }
        }
    }
    out.sort_by(|a, b| bits::size_lex_cmp(*a, *b));
    out
}

/// Lower bound on the dimension `d` of any realization of `K` as the nerve
/// of convex sets in `ℝ^d`.
///
/// By Helly's theorem, if every `d + 1` of the convex sets indexed by `σ`
/// meet then all of them meet. A minimal non-face of size `m` violates that
/// for every `d < m − 1`.
pub fn helly_lower_bound(k: &SimplicialComplex) -> usize {
    minimal_non_faces(k)
        .into_iter()
        .map(|s| bits::size(s).saturating_sub(1))
        .max()
        .unwrap_or(0)
}

/// Shortest path in the 1-skeleton, ties broken towards smaller indices.
pub fn shortest_edge_path(k: &SimplicialComplex, from: usize, to: usize) -> Result<Vec<usize>> {
    for v in [from, to] {
        if !k.has_vertex(v) {
            return Err(Error::NotAVertex { vertex: v });
        }
    }
    let adj = adjacency(k);
    let (parent, _) = bfs(&adj, from);
    if !parent.contains_key(&to) {
        return Err(Error::NoPath { from, to });
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[&cur];
        path.push(cur);
    }
    path.reverse();
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(n, facets).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    fn tetra_boundary() -> SimplicialComplex {
        cx(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    fn two_points() -> SimplicialComplex {
        cx(2, &[&[1], &[2]])
    }

    #[test]
    fn gf2_rank_small() {
        let mut m = Gf2Matrix::zeros(3, 3);
        for (r, c) in [(0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 2)] {
            m.set(r, c, true);
        }
        assert_eq!(m.rank(), 2);
        m.flip(2, 2);
        assert_eq!(m.rank(), 3);
        assert_eq!(Gf2Matrix::zeros(4, 0).rank(), 0);
    }

    #[test]
    fn gf2_rank_wide_rows() {
        let mut m = Gf2Matrix::zeros(2, 130);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(1, 3, true);
        assert_eq!(m.rank(), 2);
        assert!(m.get(0, 129) && !m.get(0, 128));
    }

    #[test]
    fn boundary_rank_examples() {
        assert_eq!(boundary_rank(&hollow_triangle(), 1), 2);
        assert_eq!(boundary_rank(&SimplicialComplex::simplex(3).unwrap(), 2), 1);
        assert_eq!(boundary_rank(&tetra_boundary(), 0), 0);
        assert_eq!(boundary_rank(&hollow_triangle(), 5), 0);
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let k = SimplicialComplex::simplex(5).unwrap();
        for d in 1..5 {
            assert!(boundary_matrix(&k, d)
                .mul(&boundary_matrix(&k, d + 1))
                .is_zero());
        }
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_default(&hollow_triangle()), BettiVector(vec![1, 1]));
        assert_eq!(betti_default(&tetra_boundary()), BettiVector(vec![1, 0, 1]));
        assert_eq!(betti_numbers(&two_points(), 1), BettiVector(vec![2, 0]));
        assert_eq!(betti_default(&hollow_triangle()).to_string(), "b0=1 b1=1");
    }

    #[test]
    fn betti_of_degenerate_complexes() {
        assert_eq!(
            betti_numbers(&SimplicialComplex::void(3), 2),
            BettiVector(vec![0, 0, 0])
        );
        let e = SimplicialComplex::from_facets(3, [0]).unwrap();
        assert_eq!(betti_numbers(&e, 1), BettiVector(vec![0, 0]));
    }

    #[test]
    fn component_examples() {
        assert_eq!(connected_components(&cx(4, &[&[1, 2], &[3, 4]])).len(), 2);
        assert_eq!(
            connected_components(&hollow_triangle()),
            vec![vec![1, 2, 3]]
        );
        let e = SimplicialComplex::from_facets(3, [0]).unwrap();
        assert!(connected_components(&e).is_empty());
    }

    #[test]
    fn pi1_examples() {
        let p = pi1_presentation(&hollow_triangle(), 1).unwrap();
        assert_eq!(p.generators, vec![(2, 3)]);
        assert!(p.relations.is_empty());
        assert_eq!(p.render(), "generators: e(2,3)\nrelations:\n");

        let p = pi1_presentation(&SimplicialComplex::simplex(3).unwrap(), 1).unwrap();
        assert_eq!(p.generators.len(), 1);
        assert_eq!(
            p.relations,
            vec![vec![Letter {
                generator: 1,
                inverse: false
            }]]
        );

        let p = pi1_presentation(&cx(3, &[&[1, 2], &[2, 3]]), 1).unwrap();
        assert!(p.generators.is_empty());
        assert_eq!(p.render(), "generators:\nrelations:\n");
    }

    #[test]
    fn pi1_relation_orientation() {
        // Star tree from 2: tree edges (1,2), (2,3); non-tree (1,3) traversed 3 → 1.
        let p = pi1_presentation(&SimplicialComplex::simplex(3).unwrap(), 2).unwrap();
        assert_eq!(p.generators, vec![(1, 3)]);
        assert_eq!(render_word(&p.relations[0]), "g1^-1");
    }

    #[test]
    fn pi1_errors() {
        assert_eq!(pi1_presentation(&two_points(), 1), Err(Error::Disconnected));
        assert_eq!(
            pi1_presentation(&hollow_triangle(), 4),
            Err(Error::MissingBasepoint { vertex: 4 })
        );
    }

    #[test]
    fn helly_examples() {
        assert_eq!(helly_lower_bound(&hollow_triangle()), 2);
        assert_eq!(
            helly_lower_bound(&SimplicialComplex::simplex(4).unwrap()),
            0
        );
        assert_eq!(helly_lower_bound(&two_points()), 1);
        assert_eq!(helly_lower_bound(&tetra_boundary()), 3);
        assert_eq!(helly_lower_bound(&SimplicialComplex::void(2)), 0);
    }

    #[test]
    fn minimal_non_faces_of_path() {
        let k = cx(3, &[&[1, 2], &[2, 3]]);
        let m: Vec<Vec<usize>> = minimal_non_faces(&k)
            .into_iter()
            .map(bits::index_vec)
            .collect();
        assert_eq!(m, vec![vec![1, 3]]);
    }

    #[test]
    fn path_examples() {
        assert_eq!(
            shortest_edge_path(&hollow_triangle(), 1, 3).unwrap(),
            [1, 3]
        );
        assert_eq!(shortest_edge_path(&hollow_triangle(), 2, 2).unwrap(), [2]);
        assert_eq!(
            shortest_edge_path(&two_points(), 1, 2),
            Err(Error::NoPath { from: 1, to: 2 })
        );
        assert_eq!(
            shortest_edge_path(&two_points(), 1, 7),
            Err(Error::NotAVertex { vertex: 7 })
        );
    }

    #[test]
    fn path_prefers_small_indices() {
        let square = cx(4, &[&[1, 2], &[1, 3], &[2, 4], &[3, 4]]);
        assert_eq!(shortest_edge_path(&square, 1, 4).unwrap(), [1, 2, 4]);
    }
}
