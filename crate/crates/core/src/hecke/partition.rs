use std::fmt;

use serde::{Deserialize, Serialize};

use super::HeckeError;

/// A partition of `n`: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, HeckeError> {
        if parts.contains(&0) {
            return Err(HeckeError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(HeckeError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self, HeckeError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Contents `col - row` of the cells where a box may be added.
    pub fn addable_contents(&self) -> Vec<i32> {
        let mut out = Vec::new();
        for (r, &p) in self.parts.iter().enumerate() {
            if r == 0 || self.parts[r - 1] > p {
                out.push(p as i32 - r as i32);
            }
        }
        out.push(-(self.parts.len() as i32));
        out
    }

    /// Number of standard tableaux (hook length formula).
    pub fn dimension(&self) -> u64 {
        let conj = self.conjugate();
        let n = self.n() as u64;
        let mut num: u128 = (1..=n as u128).product();
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p {
                let hook = (p - c - 1) + (conj.parts[c] - r - 1) + 1;
                num /= hook as u128;
            }
        }
        num as u64
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = HeckeError;
    fn try_from(v: Vec<usize>) -> Result<Self, HeckeError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau filled with `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StdTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    contents: Vec<i32>,
    row_of: Vec<usize>,
}

impl StdTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, HeckeError> {
        let bad = |why: &str| HeckeError::NonStandardTableau(format!("{rows:?}: {why}"));
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|_| bad("row lengths do not form a partition"))?;
        let n = shape.n();
        let mut contents = vec![0; n];
        let mut row_of = vec![0; n];
        let mut seen = vec![false; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &k) in row.iter().enumerate() {
                if k == 0 || k > n || seen[k - 1] {
                    return Err(bad("entries are not a permutation of 1..n"));
                }
                seen[k - 1] = true;
                if c > 0 && row[c - 1] >= k {
                    return Err(bad("row not increasing"));
                }
                if r > 0 && rows[r - 1][c] >= k {
                    return Err(bad("column not increasing"));
                }
                contents[k - 1] = c as i32 - r as i32;
                row_of[k - 1] = r;
            }
        }
        Ok(StdTableau {
            shape,
            rows,
            contents,
            row_of,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.contents.len()
    }

    /// Content of the box holding `k` (1-based).
    pub fn content(&self, k: usize) -> i32 {
        self.contents[k - 1]
    }

    pub fn contents(&self) -> &[i32] {
        &self.contents
    }

    /// Row (0-based) of the box holding `k` (1-based).
    pub fn row_of(&self, k: usize) -> usize {
        self.row_of[k - 1]
    }

    /// The tableau with `n` removed.
    pub fn restrict(&self) -> Option<StdTableau> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let mut rows = self.rows.clone();
        let r = self.row_of(n);
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        Some(StdTableau::new(rows).expect("restriction of a standard tableau"))
    }

    /// Tableau with the entries `i` and `i+1` exchanged, if still standard.
    pub fn swap(&self, i: usize) -> Option<StdTableau> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&k| match k {
                        k if k == i => i + 1,
                        k if k == i + 1 => i,
                        k => k,
                    })
                    .collect()
            })
            .collect();
        StdTableau::new(rows).ok()
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// All standard tableaux of shape `shape`, in a fixed order.
pub fn standard_tableaux(shape: &Partition) -> Vec<StdTableau> {
    fn rec(shape: &[usize], filled: &mut Vec<Vec<usize>>, k: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if k > n {
            out.push(filled.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = filled[r].len();
            if len < shape[r] && (r == 0 || filled[r - 1].len() > len) {
                filled[r].push(k);
                rec(shape, filled, k + 1, n, out);
                filled[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut filled = vec![Vec::new(); shape.len()];
    rec(shape.parts(), &mut filled, 1, shape.n(), &mut out);
    out.into_iter()
        .map(|rows| StdTableau::new(rows).expect("generated tableau is standard"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_order_and_counts() {
        let p3: Vec<Vec<usize>> = partitions(3).into_iter().map(Vec::from).collect();
        assert_eq!(p3, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn invalid_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn dimensions_match_enumeration() {
        for n in 1..=7 {
            for p in partitions(n) {
                assert_eq!(standard_tableaux(&p).len() as u64, p.dimension(), "{p}");
            }
        }
    }

    #[test]
    fn contents_and_restriction() {
        let t = StdTableau::new(vec![vec![1, 2, 4], vec![3]]).unwrap();
        assert_eq!(t.contents(), &[0, 1, -1, 2]);
        assert_eq!(t.restrict().unwrap().rows(), &[vec![1, 2], vec![3]]);
        assert!(t.swap(1).is_none());
        assert_eq!(t.swap(2).unwrap().rows(), &[vec![1, 3, 4], vec![2]]);
        assert!(StdTableau::new(vec![vec![2, 1]]).is_err());
    }

    #[test]
    fn addable_cells() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.addable_contents(), vec![2, 0, -2]);
        assert_eq!(Partition::new(vec![]).unwrap().addable_contents(), vec![0]);
    }
}
