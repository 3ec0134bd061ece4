//! Integer partitions and their Young diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Cells are addressed
/// 1-based as `(row, col)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based), zero beyond the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Height of column `j` (1-based), zero beyond the first row's length.
    pub fn col_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.row_len(1)
    }

    pub fn conjugate(&self) -> Partition {
        Partition { parts: (1..=self.width()).map(|j| self.col_len(j)).collect() }
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.row_len(row)
    }

    /// `other ⊆ self` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells in reading order (row by row, left to right).
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize> {
        if !self.contains_cell(row, col) {
            return Err(Error::CellOutsideDiagram { row, col });
        }
        Ok(self.row_len(row) - col + self.col_len(col) - row + 1)
    }

    /// Product of all hook lengths.
    pub fn hook_alpha(&self) -> u128 {
        self.cells().map(|(i, j)| self.hook_length(i, j).unwrap() as u128).product()
    }

    /// `∏ λ_i!`, the order of the row group.
    pub fn factorial_product(&self) -> u128 {
        self.parts.iter().map(|&p| factorial(p)).product()
    }

    /// Cells whose removal leaves a partition, top to bottom.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&i| self.row_len(i) > self.row_len(i + 1))
            .map(|i| (i, self.row_len(i)))
            .collect()
    }

    pub fn remove_cell(&self, row: usize, col: usize) -> Result<Partition> {
        if !self.corners().contains(&(row, col)) {
            return Err(Error::CellOutsideDiagram { row, col });
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// All partitions of `n` in lexicographically descending order.
    pub fn all(n: usize) -> PartitionIter {
        PartitionIter { next: Some(if n == 0 { Vec::new() } else { vec![n] }), within: None }
    }

    /// Partitions of `n` whose diagram fits inside `bound`.
    pub fn all_within(n: usize, bound: &Partition) -> PartitionIter {
        let mut it = Self::all(n);
        it.within = Some(bound.clone());
        it
    }

    /// All partitions `μ ⊆ self`, including the empty one and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        (0..=self.size()).flat_map(|k| Self::all_within(k, self)).collect()
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Lexicographically descending enumeration of partitions of `n`, with an
/// optional containment filter.
pub struct PartitionIter {
    next: Option<Vec<usize>>,
    within: Option<Partition>,
}

fn successor(p: &[usize]) -> Option<Vec<usize>> {
    // Rightmost part > 1: decrement it and refill the tail greedily.
    let i = p.iter().rposition(|&x| x > 1)?;
    let mut out = p[..i].to_vec();
    let cap = p[i] - 1;
    let mut rem: usize = p[i..].iter().sum();
    while rem > 0 {
        let take = rem.min(cap);
        out.push(take);
        rem -= take;
    }
    Some(out)
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let cur = self.next.take()?;
            self.next = successor(&cur);
            let p = Partition { parts: cur };
            match &self.within {
                Some(b) if !b.contains(&p) => continue,
                _ => return Some(p),
            }
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,2,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn hook_alpha_examples() {
        assert_eq!(p("1").hook_alpha(), 1);
        assert_eq!(p("2,1").hook_alpha(), 3);
        let lam = p("4,3,1,1");
        let hooks: Vec<usize> = lam.cells().map(|(i, j)| lam.hook_length(i, j).unwrap()).collect();
        assert_eq!(hooks, vec![7, 4, 3, 1, 5, 2, 1, 2, 1]);
        assert_eq!(lam.hook_alpha(), 1680);
        assert!(matches!(lam.hook_length(2, 4), Err(Error::CellOutsideDiagram { row: 2, col: 4 })));
    }

    #[test]
    fn enumeration() {
        let all0: Vec<_> = Partition::all(0).collect();
        assert_eq!(all0, vec![Partition::empty()]);
        let all4: Vec<String> = Partition::all(4).map(|q| q.to_string()).collect();
        assert_eq!(all4, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        let inside: Vec<_> = Partition::all_within(3, &p("2,1")).collect();
        assert_eq!(inside, vec![p("2,1")]);
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).count()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn conjugates_and_corners() {
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        for n in 0..=10 {
            for lam in Partition::all(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.hook_alpha(), lam.conjugate().hook_alpha());
            }
        }
        assert_eq!(p("3,2,2,1").corners(), vec![(1, 3), (3, 2), (4, 1)]);
        assert_eq!(p("3,2,2,1").remove_cell(3, 2).unwrap(), p("3,2,1,1"));
        assert!(p("3,2,2,1").remove_cell(2, 2).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }
}
