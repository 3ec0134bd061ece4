//! Permutations of `{1..n}` in one-line form.
//!
//! Composition is right-to-left: `p.compose(&q)` maps `i` to `p(q(i))`, which
//! makes the product of transpositions `(a,b1)(a,b2)...(a,br)` equal to the
//! cycle `(a, br, ..., b1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Entries are stored 1-based as `u16`; words up to length 16 stay inline.
pub type Word = SmallVec<[u16; 16]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Word,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u16).collect() }
    }

    /// Builds a permutation from its one-line word, `word[i-1] = p(i)`.
    pub fn from_word<I: IntoIterator<Item = usize>>(word: I) -> Result<Self> {
        let word: Vec<usize> = word.into_iter().collect();
        let n = word.len();
        if n > u16::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n {
                return Err(Error::EntryOutOfRange { entry: x, bound: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedEntry { entry: x });
            }
        }
        Ok(Permutation { word: word.into_iter().map(|x| x as u16).collect() })
    }

    pub(crate) fn from_word_unchecked(word: Word) -> Self {
        Permutation { word }
    }

    /// The transposition `(a b)` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        for x in [a, b] {
            if x == 0 || x > n {
                return Err(Error::EntryOutOfRange { entry: x, bound: n });
            }
        }
        if a == b {
            return Err(Error::RepeatedEntry { entry: a });
        }
        let mut p = Self::identity(n);
        p.word.swap(a - 1, b - 1);
        Ok(p)
    }

    /// The cycle `(a, bs[r-1], ..., bs[0])`, i.e. the product
    /// `(a,bs[0])(a,bs[1])...(a,bs[r-1])`.
    pub fn cycle(n: usize, a: usize, bs: &[usize]) -> Result<Self> {
        let mut all = Vec::with_capacity(bs.len() + 1);
        all.push(a);
        all.extend(bs.iter().rev().copied());
        Self::from_cycle_entries(n, &all)
    }

    /// The cyclic permutation `c[0] -> c[1] -> ... -> c[last] -> c[0]`.
    pub fn from_cycle_entries(n: usize, c: &[usize]) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &x in c {
            if x == 0 || x > n {
                return Err(Error::EntryOutOfRange { entry: x, bound: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedEntry { entry: x });
            }
        }
        let mut p = Self::identity(n);
        for (i, &x) in c.iter().enumerate() {
            p.word[x - 1] = c[(i + 1) % c.len()] as u16;
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u16] {
        &self.word
    }

    /// `p(i)` for `1 <= i <= n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: q.degree() });
        }
        Ok(self.compose_unchecked(q))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, q: &Permutation) -> Permutation {
        let w = &self.word;
        Permutation { word: q.word.iter().map(|&x| w[x as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv: Word = SmallVec::from_elem(0, self.degree());
        for (i, &x) in self.word.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u16;
        }
        Permutation { word: inv }
    }

    /// +1 or -1.
    pub fn sign(&self) -> i32 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.word[i] as usize - 1;
            }
        }
        if (n - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The graded product: `p` on `1..=n`, `q` shifted onto `n+1..=n+m`.
    pub fn star(&self, q: &Permutation) -> Permutation {
        let n = self.degree() as u16;
        let mut word = self.word.clone();
        word.extend(q.word.iter().map(|&x| x + n));
        Permutation { word }
    }

    /// Embeds into `S_m` (`m >= n`) fixing the new points.
    pub fn pad_to(&self, m: usize) -> Result<Permutation> {
        if m < self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: m });
        }
        Ok(self.star(&Permutation::identity(m - self.degree())))
    }

    /// Disjoint cycles including fixed points, each starting at its least
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.apply(i);
            }
            out.push(c);
        }
        out
    }

    pub fn to_cycle_string(&self) -> String {
        if self.degree() == 0 {
            return "()".into();
        }
        self.cycles()
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }

    /// Parses cycle notation such as `"(1 2)(3)"`. Fixed points may be
    /// omitted; the degree is the largest entry mentioned unless `degree`
    /// is supplied.
    pub fn parse_cycles(s: &str, degree: Option<usize>) -> Result<Permutation> {
        let s = s.trim();
        let bad = |m: &str| Error::Parse(format!("bad cycle notation {s:?}: {m}"));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = open.find(')').ok_or_else(|| bad("missing ')'"))?;
            let body = &open[..close];
            let c = body
                .split(|ch: char| ch == ',' || ch.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("non-numeric entry")))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(c);
            rest = open[close + 1..].trim_start();
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = degree.unwrap_or(max);
        if max > n {
            return Err(Error::EntryOutOfRange { entry: max, bound: n });
        }
        let mut seen = vec![false; n + 1];
        let mut p = Permutation::identity(n);
        for c in &cycles {
            for &x in c {
                if x == 0 {
                    return Err(Error::EntryOutOfRange { entry: 0, bound: n });
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::RepeatedEntry { entry: x });
                }
            }
            for (i, &x) in c.iter().enumerate() {
                p.word[x - 1] = c[(i + 1) % c.len()] as u16;
            }
        }
        Ok(p)
    }

    /// Parses the one-line form `"[2,1,3]"`.
    pub fn parse_one_line(s: &str) -> Result<Permutation> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad one-line form {s:?}")))?;
        let word = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_word(word)
    }

    /// Iterates all of `S_n` in lexicographic order of the one-line word.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=n as u16).collect()) }
    }
}

/// Lexicographic enumeration of `S_n`.
pub struct AllPermutations {
    next: Option<Word>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut w = cur.clone();
        let n = w.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| w[i] < w[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| w[j] > w[i]).unwrap();
                w.swap(i, j);
                w[i + 1..].reverse();
                self.next = Some(w);
            }
        }
        Some(Permutation { word: cur })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            Self::parse_one_line(s)
        } else {
            Self::parse_cycles(s, None)
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Vec::<usize>::deserialize(d)?;
        Permutation::from_word(w).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(n: usize, a: usize, b: usize) -> Permutation {
        Permutation::transposition(n, a, b).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id3 = Permutation::identity(3);
        assert_eq!(id3.compose(&t(3, 1, 2)).unwrap(), t(3, 1, 2));
        assert_eq!(t(2, 1, 2).compose(&t(2, 1, 2)).unwrap(), Permutation::identity(2));
        // (1 2)(2 3): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        let c = t(3, 1, 2).compose(&t(3, 2, 3)).unwrap();
        assert_eq!(c.word(), &[2, 3, 1]);
        assert_eq!(c, p("(1 2 3)"));
        assert!(matches!(
            id3.compose(&Permutation::identity(2)),
            Err(Error::DegreeMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn inverse_and_sign() {
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        assert_eq!(t(2, 1, 2).inverse(), t(2, 1, 2));
        assert_eq!(p("(1 2 3)").inverse(), p("(1 3 2)"));
        assert_eq!(Permutation::identity(5).sign(), 1);
        assert_eq!(t(2, 1, 2).sign(), -1);
        assert_eq!(p("(1 2 3)").sign(), 1);
    }

    #[test]
    fn cycle_examples() {
        assert!(Permutation::cycle(5, 2, &[]).unwrap().is_identity());
        assert_eq!(Permutation::cycle(9, 9, &[4]).unwrap(), t(9, 9, 4));
        let c = Permutation::cycle(3, 3, &[1, 2]).unwrap();
        assert_eq!(c, t(3, 3, 1).compose(&t(3, 3, 2)).unwrap());
        assert!(matches!(Permutation::cycle(4, 1, &[2, 1]), Err(Error::RepeatedEntry { entry: 1 })));
    }

    #[test]
    fn star_examples() {
        let s = Permutation::identity(2).star(&Permutation::identity(3));
        assert_eq!(s, Permutation::identity(5));
        assert_eq!(t(2, 1, 2).star(&Permutation::identity(1)), t(3, 1, 2));
        let s = t(2, 1, 2).star(&t(2, 1, 2));
        assert_eq!(s, p("(1 2)(3 4)"));
        assert_eq!(s.word(), &[2, 1, 4, 3]);
    }

    #[test]
    fn text_round_trip() {
        let q = p("[3,1,2,5,4]");
        assert_eq!(q.to_string(), "[3,1,2,5,4]");
        assert_eq!(q.to_cycle_string(), "(1 3 2)(4 5)");
        assert_eq!(p(&q.to_cycle_string()), q);
        assert_eq!(p("(1 2)(3)").degree(), 3);
        assert_eq!(Permutation::identity(0).to_cycle_string(), "()");
        assert_eq!(p("()").degree(), 0);
        assert!("[1,1]".parse::<Permutation>().is_err());
        assert!("(1 2".parse::<Permutation>().is_err());
        assert!("(1 2)(2 3)".parse::<Permutation>().is_err());
    }

    #[test]
    fn enumerates_symmetric_group() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(0).count(), 1);
    }
}
