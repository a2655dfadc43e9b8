//! Exact canonical labeling.
//!
//! Equitable-partition refinement plus an exhaustive search over
//! individualizations of the first smallest non-singleton cell. Leaves are
//! compared by their relabeled adjacency matrix and the minimum wins. Equal
//! leaves reveal automorphisms, which prune sibling branches that lie in the
//! same orbit of the pointwise stabilizer of the current prefix.

use std::fmt;

use super::{Graph, VertexSet};

/// Isomorphism-invariant byte encoding of a graph.
///
/// Layout: vertex count as little-endian `u32`, then the upper triangle of
/// the canonically relabeled adjacency matrix packed row-major, LSB first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Box<[u8]>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        let mut b = [0u8; 4];
        b.copy_from_slice(&self.0[..4]);
        u32::from_le_bytes(b) as usize
    }

    /// Short hex digest for display; not a substitute for equality.
    pub fn short_hex(&self) -> String {
        // FNV-1a over the key bytes
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for &b in self.0.iter() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        format!("{h:016x}")
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CanonicalKey(n={}, {})",
            self.vertex_count(),
            self.short_hex()
        )
    }
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    words: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

pub(super) fn canonical_form(g: &Graph) -> CanonicalKey {
    canonical_labeling(g).0
}

/// Canonical key plus the labeling: `order[i]` is the vertex placed at
/// canonical position `i`.
pub(crate) fn canonical_labeling(g: &Graph) -> (CanonicalKey, Vec<usize>) {
    let n = g.n();
    let mut search = Search {
        g,
        words: n.div_ceil(64).max(1),
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut cells = initial_partition(g);
    refine(g, &mut cells);
    search.descend(cells, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    (encode(g, &best.lab), best.lab)
}

fn initial_partition(g: &Graph) -> Cells {
    let n = g.n();
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut by_degree: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in 0..n {
        by_degree[g.degree(v)].push(v);
    }
    by_degree.into_iter().filter(|c| !c.is_empty()).collect()
}

/// Split cells until every cell is uniform with respect to every other.
/// Sub-cells are ordered by neighbor count, so the outcome depends only on
/// the ordered partition and the graph, never on vertex numbering.
fn refine(g: &Graph, cells: &mut Cells) {
    let n = g.n();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mut mask = VertexSet::new(n);
            for &v in &cells[s] {
                mask.insert(v);
            }
            let mut c = 0;
            while c < cells.len() {
                if cells[c].len() == 1 {
                    c += 1;
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cells[c]
                    .iter()
                    .map(|&v| (g.neighbors(v).intersection_len(&mask), v))
                    .collect();
                let k0 = keyed[0].0;
                if keyed.iter().all(|&(k, _)| k == k0) {
                    c += 1;
                    continue;
                }
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        parts.push(Vec::new());
                        last = k;
                    }
                    parts.last_mut().unwrap().push(v);
                }
                let added = parts.len();
                cells.splice(c..=c, parts);
                changed = true;
                if c < s {
                    s += added - 1;
                }
                c += added;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

impl Search<'_> {
    /// Returns `Some(depth)` when a leaf equivalent to a stored one was hit:
    /// everything below `depth` on the current path is then redundant.
    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        let n = self.g.n();
        if cells.len() == n {
            let lab: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            return self.leaf(lab, prefix);
        }
        let depth = prefix.len();
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|&(i, c)| (c.len(), i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !tried.is_empty() && self.equivalent_to_tried(prefix, w, &tried) {
                continue;
            }
            let mut child: Cells = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..target].iter().cloned());
            child.push(vec![w]);
            child.push(cells[target].iter().copied().filter(|&v| v != w).collect());
            child.extend(cells[target + 1..].iter().cloned());
            refine(self.g, &mut child);
            prefix.push(w);
            let jump = self.descend(child, prefix);
            prefix.pop();
            tried.push(w);
            if let Some(j) = jump {
                if j < depth {
                    return Some(j);
                }
            }
        }
        None
    }

    /// Whether `w` shares an orbit with an already explored vertex under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn equivalent_to_tried(&self, prefix: &[usize], w: usize, tried: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            any = true;
            for (v, &image) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        tried.iter().any(|&u| find(&mut parent, u) == rw)
    }

    fn leaf(&mut self, lab: Vec<usize>, prefix: &[usize]) -> Option<usize> {
        let cert = certificate(self.g, &lab, self.words);
        let leaf = Leaf {
            cert,
            lab,
            path: prefix.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                cert: leaf.cert.clone(),
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            self.automorphisms.push(mapping(&first.lab, &leaf.lab));
            return Some(common_prefix(&first.path, prefix));
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                self.automorphisms.push(mapping(&best.lab, &leaf.lab));
                Some(common_prefix(&best.path, prefix))
            }
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Greater => None,
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The permutation sending `from[i]` to `to[i]` for every position `i`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

/// Rows of the relabeled adjacency matrix, concatenated.
fn certificate(g: &Graph, lab: &[usize], words: usize) -> Vec<u64> {
    let n = lab.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    let mut cert = vec![0u64; n * words];
    for (i, &v) in lab.iter().enumerate() {
        let row = &mut cert[i * words..(i + 1) * words];
        for w in g.neighbors(v).iter() {
            let j = pos[w];
            row[j >> 6] |= 1u64 << (j & 63);
        }
    }
    cert
}

fn encode(g: &Graph, lab: &[usize]) -> CanonicalKey {
    let n = lab.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut bytes = Vec::with_capacity(4 + bits.div_ceil(8));
    bytes.extend_from_slice(&(n as u32).to_le_bytes());
    let mut acc = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(lab[i], lab[j]) {
                acc |= 1 << filled;
            }
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc);
    }
    CanonicalKey(bytes.into_boxed_slice())
}
