//! Geometric structures over phrase-derived point sets: 4-sided range
//! reporting with range minima (wavelet tree over the y coordinate) and
//! 2-sided dominance reporting (x-sorted points under a y-maximum
//! tournament tree).

/// A point on a rank grid with a text position as satellite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: usize,
    pub y: usize,
    pub sat: usize,
}

struct WaveletNode {
    /// Compressed y-rank range covered by this node, inclusive.
    y_lo: usize,
    y_hi: usize,
    /// Point indices under this node, in x order.
    idx: Vec<u32>,
    /// `left_counts[i]` = how many of the first `i` points go to the left
    /// child.
    left_counts: Vec<u32>,
    /// Sparse table of satellite minima over this node's sequence.
    min_table: Vec<Vec<usize>>,
    left: Option<Box<WaveletNode>>,
    right: Option<Box<WaveletNode>>,
}

fn build_min_table(values: &[usize]) -> Vec<Vec<usize>> {
    let n = values.len();
    let mut levels = vec![values.to_vec()];
    let mut span = 1;
    while span * 2 <= n {
        let prev = levels.last().unwrap();
        let row: Vec<usize> = (0..=n - span * 2)
            .map(|i| prev[i].min(prev[i + span]))
            .collect();
        levels.push(row);
        span *= 2;
    }
    levels
}

fn min_table_query(table: &[Vec<usize>], lo: usize, hi: usize) -> usize {
    let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
    table[k][lo].min(table[k][hi + 1 - (1 << k)])
}

impl WaveletNode {
    fn build(points: &[GridPoint], y_ranks: &[usize], idx: Vec<u32>, y_lo: usize, y_hi: usize) -> Self {
        let sats: Vec<usize> = idx.iter().map(|&i| points[i as usize].sat).collect();
        let min_table = build_min_table(&sats);
        if y_lo == y_hi {
            return WaveletNode {
                y_lo,
                y_hi,
                left_counts: Vec::new(),
                min_table,
                idx,
                left: None,
                right: None,
            };
        }
        let mid = (y_lo + y_hi) / 2;
        let mut left_counts = Vec::with_capacity(idx.len() + 1);
        let mut left_idx = Vec::new();
        let mut right_idx = Vec::new();
        left_counts.push(0);
        for &i in &idx {
            if y_ranks[i as usize] <= mid {
                left_idx.push(i);
            } else {
                right_idx.push(i);
            }
            left_counts.push(left_idx.len() as u32);
        }
        WaveletNode {
            y_lo,
            y_hi,
            left: Some(Box::new(Self::build(points, y_ranks, left_idx, y_lo, mid))),
            right: Some(Box::new(Self::build(points, y_ranks, right_idx, mid + 1, y_hi))),
            left_counts,
            min_table,
            idx,
        }
    }
}

/// Orthogonal range reporting and range minimum over a static point set.
/// Duplicate coordinates are allowed.
pub struct ReportGrid {
    /// All points, sorted by (x, y, sat).
    points: Vec<GridPoint>,
    /// Distinct y values, sorted; wavelet ranks index into this.
    y_values: Vec<usize>,
    root: Option<WaveletNode>,
}

impl ReportGrid {
    pub fn build(mut points: Vec<GridPoint>) -> Self {
        points.sort_unstable();
        let mut y_values: Vec<usize> = points.iter().map(|p| p.y).collect();
        y_values.sort_unstable();
        y_values.dedup();
        let root = if points.is_empty() {
            None
        } else {
            let y_ranks: Vec<usize> = points
                .iter()
                .map(|p| y_values.partition_point(|&v| v < p.y))
                .collect();
            let idx: Vec<u32> = (0..points.len() as u32).collect();
            Some(WaveletNode::build(&points, &y_ranks, idx, 0, y_values.len() - 1))
        };
        ReportGrid {
            points,
            y_values,
            root,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    /// Maps the query rectangle to an x-position range and a compressed
    /// y-rank range; `None` if either range is empty.
    fn ranges(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> Option<(usize, usize, usize, usize)> {
        if self.points.is_empty() || x1 > x2 || y1 > y2 {
            return None;
        }
        let a = self.points.partition_point(|p| p.x < x1);
        let b = self.points.partition_point(|p| p.x <= x2);
        if a >= b {
            return None;
        }
        let yl = self.y_values.partition_point(|&v| v < y1);
        let yr = self.y_values.partition_point(|&v| v <= y2);
        if yl >= yr {
            return None;
        }
        Some((a, b, yl, yr - 1))
    }

    /// All points with `x1 ≤ x ≤ x2` and `y1 ≤ y ≤ y2`.
    pub fn report_rect(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> Vec<GridPoint> {
        let mut nodes = 0;
        self.report_rect_counting(x1, x2, y1, y2, &mut nodes)
    }

    /// As `report_rect`, also counting the wavelet-tree nodes visited.
    pub fn report_rect_counting(
        &self,
        x1: usize,
        x2: usize,
        y1: usize,
        y2: usize,
        nodes_visited: &mut usize,
    ) -> Vec<GridPoint> {
        let mut out = Vec::new();
        if let Some((a, b, yl, yr)) = self.ranges(x1, x2, y1, y2) {
            self.descend(self.root.as_ref().unwrap(), a, b, yl, yr, nodes_visited, &mut |node, a, b| {
                out.extend(node.idx[a..b].iter().map(|&i| self.points[i as usize]));
            });
        }
        out.sort_unstable();
        out
    }

    /// Minimum satellite over the rectangle; `None` if it contains no point.
    pub fn range_min_rect(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> Option<usize> {
        let (a, b, yl, yr) = self.ranges(x1, x2, y1, y2)?;
        let mut best: Option<usize> = None;
        let mut nodes = 0;
        self.descend(self.root.as_ref().unwrap(), a, b, yl, yr, &mut nodes, &mut |node, a, b| {
            let m = min_table_query(&node.min_table, a, b - 1);
            best = Some(best.map_or(m, |v: usize| v.min(m)));
        });
        best
    }

    /// Walks the wavelet decomposition of `[yl, yr]`, invoking `emit` on each
    /// maximal fully-covered node with the node-local position range.
    #[allow(clippy::too_many_arguments)]
    fn descend<'a, F: FnMut(&'a WaveletNode, usize, usize)>(
        &'a self,
        node: &'a WaveletNode,
        a: usize,
        b: usize,
        yl: usize,
        yr: usize,
        nodes_visited: &mut usize,
        emit: &mut F,
    ) {
        if a >= b {
            return;
        }
        *nodes_visited += 1;
        if yl <= node.y_lo && node.y_hi <= yr {
            emit(node, a, b);
            return;
        }
        let mid = (node.y_lo + node.y_hi) / 2;
        let (la, lb) = (node.left_counts[a] as usize, node.left_counts[b] as usize);
        if yl <= mid {
            self.descend(node.left.as_ref().unwrap(), la, lb, yl, yr, nodes_visited, emit);
        }
        if yr > mid {
            self.descend(node.right.as_ref().unwrap(), a - la, b - lb, yl, yr, nodes_visited, emit);
        }
    }
}

/// 2-sided dominance reporting: all points with `x ≤ s` and `y ≥ e`.
pub struct DominanceGrid {
    /// Points sorted by x; duplicates kept (multiset semantics).
    points: Vec<GridPoint>,
    /// Tournament tree of y maxima over point positions, 1-based heap layout.
    y_max: Vec<usize>,
}

impl DominanceGrid {
    pub fn build(mut points: Vec<GridPoint>) -> Self {
        points.sort_unstable();
        let m = points.len();
        let mut y_max = vec![0usize; 4 * m.max(1)];
        if m > 0 {
            Self::fill(&points, &mut y_max, 1, 0, m - 1);
        }
        DominanceGrid { points, y_max }
    }

    fn fill(points: &[GridPoint], y_max: &mut [usize], node: usize, lo: usize, hi: usize) {
        if lo == hi {
            y_max[node] = points[lo].y;
            return;
        }
        let mid = (lo + hi) / 2;
        Self::fill(points, y_max, 2 * node, lo, mid);
        Self::fill(points, y_max, 2 * node + 1, mid + 1, hi);
        y_max[node] = y_max[2 * node].max(y_max[2 * node + 1]);
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    /// All points with `x ≤ s` and `y ≥ e`, in O(log P + output) tree visits.
    pub fn report_dominating(&self, s: usize, e: usize) -> Vec<GridPoint> {
        let k = self.points.partition_point(|p| p.x <= s);
        let mut out = Vec::new();
        if k > 0 {
            self.collect(1, 0, self.points.len() - 1, k - 1, e, &mut out);
        }
        out
    }

    /// Descends only into subtrees whose y-maximum reaches `e`, restricted to
    /// positions `0..=prefix_hi`.
    fn collect(&self, node: usize, lo: usize, hi: usize, prefix_hi: usize, e: usize, out: &mut Vec<GridPoint>) {
        if lo > prefix_hi || self.y_max[node] < e {
            return;
        }
        if lo == hi {
            out.push(self.points[lo]);
            return;
        }
        let mid = (lo + hi) / 2;
        self.collect(2 * node, lo, mid, prefix_hi, e, out);
        self.collect(2 * node + 1, mid + 1, hi, prefix_hi, e, out);
    }
}
