use std::collections::BTreeMap;

use super::resolution::FreeResolutionColumn;
use crate::steenrod::AdmissibleMonomial;

/// Ext dimensions per bidegree, plus optional multiplication lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtChart {
    pub max_s: u32,
    pub max_t: u32,
    /// (s, t) -> dim; absent means zero.
    pub dims: BTreeMap<(u32, u32), usize>,
    /// Edges for h_0, h_1, h_2 when requested.
    pub h_lines: Option<Vec<HLine>>,
}

/// A chart dot: `index` numbers the generators sharing a bidegree, in
/// adjunction order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Dot {
    pub s: u32,
    pub t: u32,
    pub index: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct HLine {
    pub j: u32,
    pub from: Dot,
    pub to: Dot,
}

impl ExtChart {
    pub fn dim(&self, s: u32, t: u32) -> usize {
        self.dims.get(&(s, t)).copied().unwrap_or(0)
    }

    pub fn stem_dim(&self, k: u32) -> usize {
        (0..=self.max_s).map(|s| self.dim(s, s + k)).sum()
    }
}

pub fn ext_chart(resolution: &[FreeResolutionColumn], max_t: u32) -> ExtChart {
    let max_s = resolution.last().map_or(0, |c| c.s());
    let mut dims = BTreeMap::new();
    for col in resolution {
        for &t in col.generators() {
            if t <= max_t {
                *dims.entry((col.s(), t)).or_insert(0) += 1;
            }
        }
    }
    ExtChart {
        max_s,
        max_t,
        dims,
        h_lines: None,
    }
}

/// Dot index of generator g within its bidegree (generators adjoin in
/// order, so earlier generators of the same degree precede it).
fn dot_of(col: &FreeResolutionColumn, g: usize) -> Dot {
    let t = col.generators()[g];
    let index = col.generators()[..g].iter().filter(|&&d| d == t).count();
    Dot { s: col.s(), t, index }
}

/// h_j multiplication edges for j in {0, 1, 2}, read off the minimal
/// differential: an edge runs from generator g in (s, t) to g' in
/// (s+1, t + 2^j) exactly when d(g') has coefficient containing Sq^{2^j}
/// at g.
pub fn h_multiplication_lines(resolution: &[FreeResolutionColumn], j: u32) -> Vec<HLine> {
    assert!(j <= 2, "only h0, h1, h2 lines are supported");
    let sq = AdmissibleMonomial::single(1 << j);
    let mut lines = Vec::new();
    for s in 1..resolution.len() {
        let col = &resolution[s];
        let prev = &resolution[s - 1];
        for (g_to, coeffs) in (0..col.generators().len()).map(|g| (g, col.differential(g))) {
            for (g_from, c) in coeffs.iter().enumerate() {
                if c.contains(&sq) {
                    lines.push(HLine {
                        j,
                        from: dot_of(prev, g_from),
                        to: dot_of(col, g_to),
                    });
                }
            }
        }
    }
    lines.sort();
    lines
}
