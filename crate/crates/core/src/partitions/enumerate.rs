//! Partitions into distinct parts, in lexicographic order of their
//! ascending part lists.

use std::fmt;

/// A partition into distinct parts, parts strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistinctPartition {
    parts: Vec<usize>,
}

impl DistinctPartition {
    /// `None` unless `parts` is strictly increasing and positive.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        let ok = parts.first().is_none_or(|&p| p > 0) && parts.windows(2).all(|w| w[0] < w[1]);
        ok.then_some(DistinctPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Smallest part, `0` for the empty partition.
    pub fn smallest(&self) -> usize {
        s_k(&self.parts, 1)
    }

    /// Largest part, `0` for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn s_k(&self, k: usize) -> usize {
        s_k(&self.parts, k)
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// The `k`-th smallest of ascending `parts`; `0` when `k == 0` or there
/// are fewer than `k` parts.
pub fn s_k(parts: &[usize], k: usize) -> usize {
    match k {
        0 => 0,
        _ => parts.get(k - 1).copied().unwrap_or(0),
    }
}

/// Iterator over the partitions of `n` into distinct parts.
#[derive(Clone, Debug)]
pub struct DistinctPartitions {
    parts: Vec<usize>,
    started: bool,
    done: bool,
    n: usize,
}

/// All partitions of `n` into distinct parts; `n = 0` yields the empty one.
pub fn enum_distinct(n: usize) -> DistinctPartitions {
    DistinctPartitions {
        parts: Vec::new(),
        started: false,
        done: false,
        n,
    }
}

/// Appends the lexicographically least completion of `rest` with parts `>= lo`.
/// Requires `rest == 0` or `rest >= lo`.
fn fill_least(parts: &mut Vec<usize>, mut rest: usize, mut lo: usize) {
    while rest > 0 {
        if rest == lo || rest - lo > lo {
            parts.push(lo);
            rest -= lo;
            lo += 1;
        } else {
            parts.push(rest);
            rest = 0;
        }
    }
}

impl DistinctPartitions {
    fn advance(&mut self) -> bool {
        let mut rest = 0;
        while let Some(x) = self.parts.pop() {
            rest += x;
            // the replacement y > x must leave either nothing or a single
            // admissible tail > y: y == rest or 2y < rest
            let y = if 2 * (x + 1) < rest {
                x + 1
            } else if rest > x {
                rest
            } else {
                continue;
            };
            self.parts.push(y);
            fill_least(&mut self.parts, rest - y, y + 1);
            return true;
        }
        false
    }
}

impl Iterator for DistinctPartitions {
    type Item = DistinctPartition;

    fn next(&mut self) -> Option<DistinctPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            fill_least(&mut self.parts, self.n, 1);
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(DistinctPartition {
            parts: self.parts.clone(),
        })
    }
}

/// Calls `f` on every partition of `n` into distinct parts without allocating
/// per partition; same order as [`enum_distinct`].
pub fn for_each_distinct<F: FnMut(&[usize])>(n: usize, mut f: F) {
    fn go<F: FnMut(&[usize])>(parts: &mut Vec<usize>, rest: usize, lo: usize, f: &mut F) {
        if rest == 0 {
            f(parts);
            return;
        }
        let mut p = lo;
        while 2 * p < rest {
            parts.push(p);
            go(parts, rest - p, p + 1, f);
            parts.pop();
            p += 1;
        }
        if rest >= lo {
            parts.push(rest);
            f(parts);
            parts.pop();
        }
    }
    let mut parts = Vec::new();
    go(&mut parts, n, 1, &mut f);
}
