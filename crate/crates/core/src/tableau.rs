//! Young tableaux over arbitrary ground sets, blocks, dominance and `L(T;S)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

/// A bijective filling of a Young diagram by distinct positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    // pos[e] = (row, col), 1-based; (0, 0) for absent entries.
    pos: Vec<(u32, u32)>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let max = rows.iter().flatten().copied().max().unwrap_or(0);
        let mut pos = vec![(0u32, 0u32); max + 1];
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e == 0 {
                    return Err(Error::InvalidTableau("entries must be positive".into()));
                }
                if pos[e] != (0, 0) {
                    return Err(Error::RepeatedEntry { entry: e });
                }
                pos[e] = (i as u32 + 1, j as u32 + 1);
            }
        }
        Ok(YoungTableau { shape, rows, pos })
    }

    /// `T_can`: cells filled row by row with `1..n`.
    pub fn canonical(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let r: Vec<usize> = (next + 1..=next + p).collect();
                next += p;
                r
            })
            .collect();
        Self::new(rows).expect("canonical filling is valid")
    }

    /// Fills `shape` in reading order with `entries`.
    pub fn from_reading_word(shape: &Partition, entries: &[usize]) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.size()
            )));
        }
        let mut it = entries.iter().copied();
        let rows = shape.parts().iter().map(|&p| it.by_ref().take(p).collect()).collect();
        Self::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i - 1]
    }

    /// Entries of column `j`, top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows.iter().take_while(|r| r.len() >= j).map(|r| r[j - 1]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (1..=self.shape.width()).map(|j| self.column(j)).collect()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    pub fn position(&self, e: usize) -> Option<(usize, usize)> {
        match self.pos.get(e) {
            Some(&(r, c)) if r > 0 => Some((r as usize, c as usize)),
            _ => None,
        }
    }

    pub fn contains_entry(&self, e: usize) -> bool {
        self.position(e).is_some()
    }

    pub fn column_of(&self, e: usize) -> Option<usize> {
        self.position(e).map(|p| p.1)
    }

    /// Entries in reading order.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn max_entry(&self) -> usize {
        self.pos.len().saturating_sub(1)
    }

    /// Whether the entries are exactly `1..=size`.
    pub fn has_standard_entries(&self) -> bool {
        self.max_entry() == self.size()
    }

    /// `T|_{D_μ}`.
    pub fn restrict(&self, mu: &Partition) -> Result<YoungTableau> {
        if !self.shape.contains(mu) {
            return Err(Error::NotSubtableau(format!("{mu} is not contained in {}", self.shape)));
        }
        Self::new(mu.parts().iter().zip(&self.rows).map(|(&p, r)| r[..p].to_vec()).collect())
    }

    /// Whether `self = t|_{D_μ}` for its own shape `μ`.
    pub fn is_subtableau_of(&self, t: &YoungTableau) -> bool {
        t.shape.contains(&self.shape)
            && self.rows.iter().zip(&t.rows).all(|(a, b)| b.starts_with(a))
    }

    fn check_subtableau(&self, s: &YoungTableau) -> Result<()> {
        if !s.is_subtableau_of(self) {
            return Err(Error::NotSubtableau(format!("{s} is not a restriction of {self}")));
        }
        Ok(())
    }

    /// Removes the corner cell `(row, col)`, returning the smaller tableau
    /// and the removed entry.
    pub fn remove_corner(&self, row: usize, col: usize) -> Result<(YoungTableau, usize)> {
        let shape = self.shape.remove_cell(row, col)?;
        let e = self.rows[row - 1][col - 1];
        Ok((self.restrict(&shape)?, e))
    }

    /// `δ·T`: the tableau with every entry `e` replaced by `δ(e)`.
    pub fn act(&self, delta: &Permutation) -> Result<YoungTableau> {
        if self.max_entry() > delta.degree() {
            return Err(Error::EntryOutOfRange { entry: self.max_entry(), bound: delta.degree() });
        }
        self.relabel(|e| delta.apply(e))
    }

    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<YoungTableau> {
        Self::new(self.rows.iter().map(|r| r.iter().map(|&e| f(e)).collect()).collect())
    }

    /// The permutation sending `self(c)` to `other(c)` for every cell `c`.
    /// Both tableaux must have the same shape and entries `1..=n`.
    pub fn transport_to(&self, other: &YoungTableau) -> Result<Permutation> {
        if self.shape != other.shape {
            return Err(Error::InvalidTableau(format!("shapes {} and {} differ", self.shape, other.shape)));
        }
        let n = self.size();
        let mut w = vec![0usize; n];
        for (a, b) in self.reading_word().into_iter().zip(other.reading_word()) {
            if a > n {
                return Err(Error::EntryOutOfRange { entry: a, bound: n });
            }
            w[a - 1] = b;
        }
        Permutation::from_word(w)
    }

    /// Whether `self` dominates `s`: every entry sits weakly left of where
    /// it sits in `s`. Both must have entries exactly `1..=k`.
    pub fn dominates(&self, s: &YoungTableau) -> Result<bool> {
        if !self.has_standard_entries() || !s.has_standard_entries() || self.size() != s.size() {
            return Err(Error::InvalidTableau("dominance needs entry sets [k] on both sides".into()));
        }
        Ok((1..=self.size()).all(|i| self.column_of(i) <= s.column_of(i)))
    }

    /// Membership of `sigma` in `L(T;S)` with `T = self`.
    pub fn in_l_set(&self, sigma: &Permutation, s: &YoungTableau) -> Result<bool> {
        self.check_subtableau(s)?;
        if s.max_entry() > sigma.degree() {
            return Err(Error::EntryOutOfRange { entry: s.max_entry(), bound: sigma.degree() });
        }
        let mut moved = false;
        for e in s.reading_word() {
            let img = sigma.apply(e);
            if img == e {
                continue;
            }
            moved = true;
            match (self.column_of(img), self.column_of(e)) {
                (Some(ci), Some(ce)) if ci < ce => {}
                _ => return Ok(false),
            }
        }
        Ok(moved || sigma.is_identity())
    }

    /// The cell `(u, v)` with `v = max{j : λ'_j ≠ μ'_j}`, `u = λ'_v`, where
    /// `λ, μ` are the shapes of `self` and `s`.
    pub fn rightmost_corner_outside(&self, s: &YoungTableau) -> Result<(usize, usize)> {
        self.check_subtableau(s)?;
        let v = (1..=self.shape.width())
            .rev()
            .find(|&j| self.shape.col_len(j) != s.shape.col_len(j))
            .ok_or(Error::NoCellOutside)?;
        Ok((self.shape.col_len(v), v))
    }
}

/// A maximal run of equal-height columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub length: usize,
    pub height: usize,
    /// Column index (in the original tableau) of the block's first column.
    pub first_col: usize,
    /// Entries, column by column.
    pub entries: Vec<usize>,
}

/// Blocks of a tableau after deleting an initial run of columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub removed_cols: usize,
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    /// Blocks of `s` with its first `v` columns deleted.
    pub fn from_column(s: &YoungTableau, v: usize) -> Result<Self> {
        let width = s.shape.width();
        if v > width {
            return Err(Error::ColumnOutOfRange { col: v, max: width });
        }
        let mut blocks: Vec<Block> = Vec::new();
        for j in v + 1..=width {
            let col = s.column(j);
            match blocks.last_mut() {
                Some(b) if b.height == col.len() => {
                    b.length += 1;
                    b.entries.extend(col);
                }
                _ => blocks.push(Block { length: 1, height: col.len(), first_col: j, entries: col }),
            }
        }
        Ok(BlockDecomposition { removed_cols: v, blocks })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.length).collect()
    }

    pub fn heights(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.height).collect()
    }

    /// `l_1 + ... + l_i + u - h_i` for each block `i`.
    pub fn hook_numbers(&self, u: usize) -> Vec<usize> {
        let mut acc = 0;
        self.blocks
            .iter()
            .map(|b| {
                acc += b.length;
                acc + u - b.height
            })
            .collect()
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YoungTableau({self})")
    }
}

/// Parses rows separated by `/` with comma-separated entries.
pub(crate) fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            row.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}"))))
                .collect()
        })
        .collect()
}

impl FromStr for YoungTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_rows(s)?)
    }
}

impl Serialize for YoungTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for YoungTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> YoungTableau {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_columns() {
        let x = t("1,2,3,6/4,5/7");
        assert_eq!(x.to_string(), "1,2,3,6/4,5/7");
        assert_eq!(x.column(2), vec![2, 5]);
        assert_eq!(x.column_of(7), Some(1));
        assert_eq!(x.position(6), Some((1, 4)));
        assert!("1,2/3,4,5".parse::<YoungTableau>().is_err());
        assert!("1,2/1".parse::<YoungTableau>().is_err());
        assert_eq!(YoungTableau::canonical(&"3,1".parse().unwrap()), t("1,2,3/4"));
    }

    #[test]
    fn blocks_of_the_four_column_example() {
        let x = t("1,2,3,4/5,6,7/8/9");
        let b = BlockDecomposition::from_column(&x, 0).unwrap();
        assert_eq!(b.lengths(), vec![1, 2, 1]);
        assert_eq!(b.heights(), vec![4, 2, 1]);
        assert_eq!(b.blocks[1].entries, vec![2, 6, 3, 7]);

        let (s, a) = x.remove_corner(4, 1).unwrap();
        assert_eq!(a, 9);
        let b = BlockDecomposition::from_column(&s, 1).unwrap();
        let mut e0 = b.blocks[0].entries.clone();
        e0.sort();
        assert_eq!(e0, vec![2, 3, 6, 7]);
        assert_eq!(b.blocks[1].entries, vec![4]);
        assert_eq!(b.hook_numbers(4), vec![4, 6]);

        let (s, _) = x.remove_corner(2, 3).unwrap();
        let b = BlockDecomposition::from_column(&s, 3).unwrap();
        assert_eq!(b.blocks[0].entries, vec![4]);
        assert_eq!(b.hook_numbers(2), vec![2]);

        let (s, _) = x.remove_corner(1, 4).unwrap();
        assert!(BlockDecomposition::from_column(&s, 3).unwrap().is_empty());
        assert!(matches!(
            BlockDecomposition::from_column(&s, 5),
            Err(Error::ColumnOutOfRange { col: 5, max: 3 })
        ));
    }

    #[test]
    fn l_set_membership() {
        let x = t("1,2,3,6/4,5/7");
        let s = t("1,2,3/4,5");
        let p = |c: &str| Permutation::parse_cycles(c, Some(7)).unwrap();
        assert!(x.in_l_set(&Permutation::identity(7), &s).unwrap());
        assert!(x.in_l_set(&p("(3 7)"), &s).unwrap());
        assert!(!x.in_l_set(&p("(1 2)"), &s).unwrap());
        // Moves only entries outside S.
        assert!(!x.in_l_set(&p("(6 7)"), &s).unwrap());
        assert!(x.in_l_set(&p("(1 2)"), &t("1,2/3")).is_err());
    }

    #[test]
    fn corner_rule() {
        let x = YoungTableau::canonical(&"3,2,2,1".parse().unwrap());
        let s = x.restrict(&"3,1".parse().unwrap()).unwrap();
        assert_eq!(x.rightmost_corner_outside(&s).unwrap(), (3, 2));
        let x = t("1,2");
        assert_eq!(x.rightmost_corner_outside(&t("1")).unwrap(), (1, 2));
        let x = t("1,2/3,4");
        assert_eq!(x.rightmost_corner_outside(&t("1,2")).unwrap(), (2, 2));
        assert!(matches!(x.rightmost_corner_outside(&x), Err(Error::NoCellOutside)));
    }

    #[test]
    fn dominance() {
        let s = t("1,2,3/4,5");
        for d in ["1,2,3/4,5", "1,2,3/4/5", "1,5,3/4/2", "1,2/4,5/3", "1,2/4,3/5", "1,3/4,5/2"] {
            assert!(t(d).dominates(&s).unwrap(), "{d}");
        }
        assert!(!t("1,2,4/3,5").dominates(&s).unwrap());
        assert!(t("1,2/3").dominates(&s).is_err());
    }
}
