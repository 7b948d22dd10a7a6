//! Finite covers of a discretized stimulus space and the codes they produce.
//!
//! Points of the ground set are `1..=M`. A point's membership pattern is the
//! codeword whose support lists the sets containing it, so the code of a
//! cover is the set of patterns that occur. The empty intersection is taken
//! to be the whole ground set, which puts the zero word in the code exactly
//! when some point lies in no set.

use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::code::{word_string, Code, MAX_LEN};
use crate::complex::{delta_complex, nerve, SimplicialComplex};
use crate::error::{Error, ParseError, ParseErrorKind, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    ground_size: usize,
    sets: Vec<FixedBitSet>,
}

impl Cover {
    /// `sets[i]` lists the 1-based points of `U_{i+1}`.
    pub fn new(ground_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        if ground_size == 0 {
            return Err(Error::EmptyGround);
        }
        if sets.len() > MAX_LEN {
            return Err(Error::CapacityExceeded {
                what: "set count",
                value: sets.len(),
                limit: MAX_LEN,
            });
        }
        let mut bitsets = Vec::with_capacity(sets.len());
        for set in sets {
            let mut b = FixedBitSet::with_capacity(ground_size);
            for p in set {
                if p == 0 || p > ground_size {
                    return Err(Error::PointOutOfRange {
                        point: p,
                        ground_size,
                    });
                }
                b.insert(p - 1);
            }
            bitsets.push(b);
        }
        Ok(Cover {
            ground_size,
            sets: bitsets,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    /// Points of `U_i` (1-based `i`), ascending.
    pub fn set(&self, i: usize) -> Vec<usize> {
        self.sets[i - 1].ones().map(|p| p + 1).collect()
    }

    pub(crate) fn point_set(&self, i: usize) -> &FixedBitSet {
        &self.sets[i - 1]
    }

    /// Membership pattern of point `p` as a support mask.
    pub fn pattern(&self, p: usize) -> u64 {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains(p - 1))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// The same cover with `U_i` replaced by `U_{order[i-1]}`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let mut sets = Vec::with_capacity(order.len());
        for &i in order {
            if i == 0 || i > self.sets.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    n: self.sets.len(),
                });
            }
            sets.push(self.sets[i - 1].clone());
        }
        Ok(Cover {
            ground_size: self.ground_size,
            sets,
        })
    }

    /// Cover file text: a `points M sets N` header, then one line of points per set.
    pub fn render(&self) -> String {
        let mut out = format!("points {} sets {}\n", self.ground_size, self.sets.len());
        for s in &self.sets {
            let pts: Vec<String> = s.ones().map(|p| (p + 1).to_string()).collect();
            out.push_str(&pts.join(" "));
            out.push('\n');
        }
        out
    }

    fn check_sets(&self) -> Result<()> {
        if self.sets.is_empty() {
            Err(Error::ZeroSets)
        } else {
            Ok(())
        }
    }
}

/// Parse the cover file format.
///
/// Before the header, blank and `#` lines are skipped. After it, `#` lines
/// are skipped but blank lines count as empty sets. Anything other than
/// blanks or comments after the last set line is an error.
pub fn parse_cover(text: &str) -> Result<Cover> {
    let perr = |line: usize, kind: ParseErrorKind| -> Error { ParseError { line, kind }.into() };

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)));
    let mut last_line = 0;

    let (header_line, header) = loop {
        match lines.next() {
            None => {
                return Err(perr(
                    last_line.max(1),
                    ParseErrorKind::BadHeader(String::new()),
                ))
            }
            Some((no, l)) => {
                last_line = no;
                if l.trim().is_empty() || l.starts_with('#') {
                    continue;
                }
                break (no, l);
            }
        }
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (ground_size, count) = match toks.as_slice() {
        ["points", m, "sets", n] => match (m.parse::<usize>(), n.parse::<usize>()) {
            (Ok(m), Ok(n)) if m > 0 => (m, n),
            _ => {
                return Err(perr(
                    header_line,
                    ParseErrorKind::BadHeader(header.to_string()),
                ))
            }
        },
        _ => {
            return Err(perr(
                header_line,
                ParseErrorKind::BadHeader(header.to_string()),
            ))
        }
    };
    if count > MAX_LEN {
        return Err(Error::CapacityExceeded {
            what: "set count",
            value: count,
            limit: MAX_LEN,
        });
    }

    let mut sets = Vec::with_capacity(count);
    while sets.len() < count {
        let Some((no, l)) = lines.next() else {
            return Err(perr(
                last_line,
                ParseErrorKind::MissingSets {
                    expected: count,
                    found: sets.len(),
                },
            ));
        };
        last_line = no;
        if l.starts_with('#') {
            continue;
        }
        let mut pts = Vec::new();
        for tok in l.split_whitespace() {
            let p: usize = tok
                .parse()
                .map_err(|_| perr(no, ParseErrorKind::BadPoint(tok.to_string())))?;
            if p == 0 || p > ground_size {
                return Err(perr(
                    no,
                    ParseErrorKind::PointOutOfRange {
                        point: p,
                        ground_size,
                    },
                ));
            }
            pts.push(p);
        }
        sets.push(pts);
    }
    for (no, l) in lines {
        if !(l.trim().is_empty() || l.starts_with('#')) {
            return Err(perr(no, ParseErrorKind::TrailingData));
        }
    }
    Cover::new(ground_size, sets)
}

/// The code of a cover: all membership patterns that occur.
pub fn code_of_cover(cover: &Cover) -> Result<Code> {
    cover.check_sets()?;
    Code::new(
        cover.set_count(),
        (1..=cover.ground_size).map(|p| cover.pattern(p)),
    )
}

/// Points grouped by membership pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atlas {
    len: usize,
    entries: BTreeMap<u64, Vec<usize>>,
}

impl Atlas {
    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn points(&self, mask: u64) -> Option<&[usize]> {
        self.entries.get(&mask).map(Vec::as_slice)
    }

    /// `(support mask, points)` in canonical word order.
    pub fn entries(&self) -> Vec<(u64, &[usize])> {
        let mut v: Vec<(u64, &[usize])> = self
            .entries
            .iter()
            .map(|(&m, pts)| (m, pts.as_slice()))
            .collect();
        v.sort_by_key(|(m, _)| m.reverse_bits() >> (64 - self.len));
        v
    }

    /// `word: p1 p2 …` per line, in canonical word order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (m, pts) in self.entries() {
            let ps: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("{}: {}\n", word_string(self.len, m), ps.join(" ")));
        }
        out
    }
}

impl fmt::Display for Atlas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn atoms(cover: &Cover) -> Result<Atlas> {
    cover.check_sets()?;
    let mut entries: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for p in 1..=cover.ground_size {
        entries.entry(cover.pattern(p)).or_default().push(p);
    }
    Ok(Atlas {
        len: cover.set_count(),
        entries,
    })
}

/// An axis-aligned box of integer grid points, bounds inclusive on every axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl GridBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        GridBox { lo, hi }
    }

    pub fn interval(lo: i64, hi: i64) -> Self {
        GridBox::new(vec![lo], vec![hi])
    }

    fn dim(&self) -> usize {
        self.lo.len()
    }

    fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(l, h)| l > h)
    }

    fn contains_point(&self, p: &[i64]) -> bool {
        p.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(x, (l, h))| l <= x && x <= h)
    }

    fn inside(&self, outer: &GridBox) -> bool {
        self.lo
            .iter()
            .zip(&self.hi)
            .zip(outer.lo.iter().zip(&outer.hi))
            .all(|((l, h), (ol, oh))| ol <= l && h <= oh)
    }
}

/// Cover of the grid points of `extent` by the grid points inside each box.
///
/// Points are numbered from 1 in row-major order (the last axis varies fastest).
pub fn grid_box_cover(dim: usize, boxes: &[GridBox], extent: &GridBox) -> Result<Cover> {
    if !(1..=3).contains(&dim) || extent.dim() != dim || extent.hi.len() != dim {
        return Err(Error::BadDimension { dim });
    }
    if extent.is_empty() {
        return Err(Error::EmptyExtent);
    }
    for (i, b) in boxes.iter().enumerate() {
        if b.dim() != dim || b.hi.len() != dim {
            return Err(Error::BadDimension { dim: b.dim() });
        }
        if b.is_empty() || !b.inside(extent) {
            return Err(Error::BoxOutOfExtent { index: i + 1 });
        }
    }

    let points = grid_points(extent);
    let sets = boxes
        .iter()
        .map(|b| {
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| b.contains_point(p))
                .map(|(i, _)| i + 1)
                .collect()
        })
        .collect();
    Cover::new(points.len(), sets)
}

/// Grid points of a box in row-major order.
pub fn grid_points(extent: &GridBox) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for (l, h) in extent.lo.iter().zip(&extent.hi) {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (*l..=*h).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// Cover of the cyclic grid `ℤ/G` by arcs. Arc `(s, ℓ)` covers
/// `s, s+1, …, s+ℓ-1 (mod G)`; grid point `k` is stored as point `k + 1`.
pub fn circle_arc_cover(grid: usize, arcs: &[(usize, usize)]) -> Result<Cover> {
    if grid < 3 {
        return Err(Error::BadGrid { grid });
    }
    let mut sets = Vec::with_capacity(arcs.len());
    for (i, &(start, length)) in arcs.iter().enumerate() {
        if length == 0 || length >= grid {
            return Err(Error::BadArc {
                index: i + 1,
                length,
                grid,
            });
        }
        let mut pts: Vec<usize> = (0..length).map(|k| (start + k) % grid + 1).collect();
        pts.sort_unstable();
        sets.push(pts);
    }
    Cover::new(grid, sets)
}

/// Result of comparing the nerve of a cover with the complex of its code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveCheck {
    pub equal: bool,
    /// A face lying in exactly one of the two complexes.
    pub witness: Option<u64>,
    pub nerve: SimplicialComplex,
    pub delta: SimplicialComplex,
}

/// Build `N(U)` from intersections and `Δ(C(U))` from membership patterns,
/// then compare them face by face.
pub fn nerve_equals_delta(cover: &Cover) -> Result<NerveCheck> {
    cover.check_sets()?;
    let nerve = nerve(cover)?;
    let delta = delta_complex(&code_of_cover(cover)?)?;
    let witness = difference_witness(&nerve, &delta).or_else(|| difference_witness(&delta, &nerve));
    Ok(NerveCheck {
        equal: witness.is_none(),
        witness,
        nerve,
        delta,
    })
}

/// A facet of `a` that is not a face of `b`.
fn difference_witness(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<u64> {
    a.facets().iter().copied().find(|&f| !b.contains(f))
}
