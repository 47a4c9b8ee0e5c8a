//! Row-standard tableaux: enumeration, semistandardness, dominance.
//!
//! A tableau here is a filling of a partition-shaped diagram with values
//! `1, 2, …`, considered up to reordering within rows; each row is stored
//! sorted ascending, so equality of `Tableau` is equality of row multisets.
//! Columns of a tableau are read positionally from the sorted rows, which
//! matches the usual picture for standard and semistandard fillings.

use crate::partition::{Composition, Partition};
use serde::{Deserialize, Serialize};
use std::fmt;

pub type Entry = u8;

/// Row-sorted tableau of partition shape.
///
/// The derived `Ord` is lexicographic on the row vectors, i.e. on the row
/// reading word for a fixed shape; it serves as the canonical ordering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<Entry>>,
}

impl Tableau {
    /// Build from rows (any order within a row); rows get sorted.
    pub fn new(mut rows: Vec<Vec<Entry>>) -> Tableau {
        for row in &mut rows {
            row.sort_unstable();
        }
        assert!(
            rows.windows(2).all(|w| w[0].len() >= w[1].len()),
            "tableau shape must be a partition"
        );
        assert!(
            rows.iter().flatten().all(|&e| e >= 1),
            "tableau entries start at 1"
        );
        Tableau { rows }
    }

    pub fn of(rows: &[&[Entry]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    /// The tableau of shape `λ` whose row `i` is filled with the value `i+1`;
    /// its content type equals its shape.
    pub fn type_canonical(shape: &Partition) -> Tableau {
        Tableau {
            rows: shape
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &len)| vec![(i + 1) as Entry; len])
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Entry] {
        &self.rows[i]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn max_entry(&self) -> Entry {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Content type: `ctype().get(v-1)` counts the entries equal to `v`.
    /// The length is the maximum entry.
    pub fn ctype(&self) -> Composition {
        let m = self.max_entry() as usize;
        let mut counts = vec![0usize; m];
        for &e in self.rows.iter().flatten() {
            counts[e as usize - 1] += 1;
        }
        Composition::new(counts)
    }

    pub fn count(&self, v: Entry) -> usize {
        self.rows.iter().flatten().filter(|&&e| e == v).count()
    }

    pub fn count_in_row(&self, row: usize, v: Entry) -> usize {
        self.rows[row].iter().filter(|&&e| e == v).count()
    }

    /// Column `c` (0-based), read down the sorted rows.
    pub fn column(&self, c: usize) -> Vec<Entry> {
        self.rows
            .iter()
            .filter_map(|r| r.get(c).copied())
            .collect()
    }

    /// Columns strictly increase downwards (rows already weakly increase).
    pub fn is_semistandard(&self) -> bool {
        self.rows.windows(2).all(|w| {
            w[1].iter()
                .enumerate()
                .all(|(c, &below)| below > w[0][c])
        })
    }

    /// Semistandard with all entries distinct (content `1^n`).
    pub fn is_standard(&self) -> bool {
        self.is_semistandard() && self.ctype().parts().iter().all(|&c| c == 1)
    }

    /// Rename entries via `map` (1-based: value `v` becomes `map[v-1]`).
    pub fn relabel(&self, map: &[Entry]) -> Tableau {
        Tableau::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(|&e| map[e as usize - 1]).collect())
                .collect(),
        )
    }

    /// Tableau dominance: for every leading group of rows and every value
    /// `v`, `self` holds at least as many entries `≤ v` there as `other`.
    /// Both tableaux must share shape and content.
    pub fn dominates(&self, other: &Tableau) -> bool {
        debug_assert_eq!(self.shape(), other.shape());
        debug_assert_eq!(self.ctype(), other.ctype());
        let m = self.max_entry() as usize;
        let mut a = vec![0usize; m + 1];
        let mut b = vec![0usize; m + 1];
        for r in 0..self.rows.len() {
            for &e in &self.rows[r] {
                for w in e as usize..=m {
                    a[w] += 1;
                }
            }
            for &e in &other.rows[r] {
                for w in e as usize..=m {
                    b[w] += 1;
                }
            }
            if (1..=m).any(|w| a[w] < b[w]) {
                return false;
            }
        }
        true
    }

    pub fn strictly_dominates(&self, other: &Tableau) -> bool {
        self != other && self.dominates(other)
    }

    /// All row-standard tableaux of the given shape and content, sorted.
    pub fn row_standard(shape: &Partition, ctype: &Composition) -> Vec<Tableau> {
        assert_eq!(shape.n(), ctype.n(), "shape and content must have equal size");
        let mut e = RsEnum {
            ctype: ctype.parts(),
            caps: shape.parts().to_vec(),
            rows: vec![Vec::new(); shape.len()],
            out: Vec::new(),
        };
        e.values(0);
        let mut out = e.out;
        out.sort();
        out
    }

    /// All semistandard tableaux of the given shape and content, sorted.
    pub fn semistandard(shape: &Partition, ctype: &Composition) -> Vec<Tableau> {
        Tableau::row_standard(shape, ctype)
            .into_iter()
            .filter(Tableau::is_semistandard)
            .collect()
    }

    /// All standard tableaux of the given shape, sorted.  Enumerated by
    /// placing `1, …, n` successively at addable corners, so the cost is
    /// proportional to the output.
    pub fn standard(shape: &Partition) -> Vec<Tableau> {
        fn rec(
            v: usize,
            n: usize,
            shape: &Partition,
            cur: &mut Vec<usize>,
            rows: &mut Vec<Vec<Entry>>,
            out: &mut Vec<Tableau>,
        ) {
            if v > n {
                out.push(Tableau { rows: rows.clone() });
                return;
            }
            for i in 0..shape.len() {
                if cur[i] < shape.get(i) && (i == 0 || cur[i - 1] > cur[i]) {
                    cur[i] += 1;
                    rows[i].push(v as Entry);
                    rec(v + 1, n, shape, cur, rows, out);
                    rows[i].pop();
                    cur[i] -= 1;
                }
            }
        }
        let n = shape.n();
        let mut out = Vec::new();
        rec(
            1,
            n,
            shape,
            &mut vec![0; shape.len()],
            &mut vec![Vec::new(); shape.len()],
            &mut out,
        );
        out.sort();
        out
    }
}

struct RsEnum<'a> {
    ctype: &'a [usize],
    caps: Vec<usize>,
    rows: Vec<Vec<Entry>>,
    out: Vec<Tableau>,
}

impl RsEnum<'_> {
    fn values(&mut self, v: usize) {
        if v == self.ctype.len() {
            self.out.push(Tableau {
                rows: self.rows.clone(),
            });
            return;
        }
        self.place(v, 0, self.ctype[v]);
    }

    fn place(&mut self, v: usize, row: usize, need: usize) {
        if need == 0 {
            self.values(v + 1);
            return;
        }
        if row == self.caps.len() {
            return;
        }
        self.place(v, row + 1, need);
        let maxc = need.min(self.caps[row]);
        for c in 1..=maxc {
            self.caps[row] -= 1;
            self.rows[row].push((v + 1) as Entry);
            self.place(v, row + 1, need - c);
        }
        for _ in 1..=maxc {
            self.caps[row] += 1;
            self.rows[row].pop();
        }
    }
}

impl fmt::Display for Tableau {
    /// Rows joined by `|`; entries concatenated as digits, or comma-joined
    /// once any entry exceeds 9.  Example: `112|23`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        let wide = self.max_entry() > 9;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, e) in row.iter().enumerate() {
                if wide && j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl std::str::FromStr for Tableau {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| crate::Error::ParseTableau {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(Tableau { rows: Vec::new() });
        }
        // Comma anywhere switches the whole string to comma-separated rows;
        // otherwise each character is a digit.  (Entries above 9 in a
        // tableau where every row is a singleton cannot be round-tripped.)
        let wide = t.contains(',');
        let mut rows: Vec<Vec<Entry>> = Vec::new();
        for row_text in t.split('|') {
            let row_text = row_text.trim();
            let mut row = Vec::new();
            if wide {
                for tok in row_text.split(',') {
                    let e: Entry = tok.trim().parse().map_err(|_| err("bad entry"))?;
                    row.push(e);
                }
            } else {
                for ch in row_text.chars() {
                    let d = ch.to_digit(10).ok_or_else(|| err("bad digit"))?;
                    row.push(d as Entry);
                }
            }
            if row.is_empty() {
                return Err(err("empty row"));
            }
            if row.contains(&0) {
                return Err(err("entries start at 1"));
            }
            row.sort_unstable();
            rows.push(row);
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(err("row lengths must weakly decrease"));
        }
        Ok(Tableau { rows })
    }
}
