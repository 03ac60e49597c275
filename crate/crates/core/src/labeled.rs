//! Matrices of rational functions with row/column labels and block structure.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arith::{Mat, Scalar, TRat};
use crate::error::{Error, Result};

/// Serde adapter storing a `Mat` as a list of rows.
pub mod mat_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::arith::{Mat, Scalar};

    pub fn serialize<T: Scalar + Serialize, S: Serializer>(m: &Mat<T>, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[T]> = (0..m.rows()).map(|i| m.row(i)).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, T: Scalar + Deserialize<'de>, D: Deserializer<'de>>(d: D) -> Result<Mat<T>, D::Error> {
        let rows: Vec<Vec<T>> = Vec::deserialize(d)?;
        if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
            return Err(serde::de::Error::custom("ragged matrix"));
        }
        Ok(Mat::from_rows(rows))
    }
}

/// Output format for matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Pretty,
    Csv,
    Json,
}

/// A matrix of TRat entries with labels and similarity-class blocks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabeledMatrix {
    pub title: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    /// Intervals [start, end) of rows forming blocks.
    pub row_blocks: Vec<(usize, usize)>,
    pub col_blocks: Vec<(usize, usize)>,
    #[serde(with = "mat_serde")]
    pub entries: Mat<TRat>,
}

impl LabeledMatrix {
    pub fn square(title: &str, labels: Vec<String>, blocks: Vec<(usize, usize)>, entries: Mat<TRat>) -> LabeledMatrix {
        LabeledMatrix {
            title: title.to_string(),
            row_labels: labels.clone(),
            col_labels: labels,
            row_blocks: blocks.clone(),
            col_blocks: blocks,
            entries,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &TRat {
        self.entries.get(i, j)
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.row_labels.iter().position(|l| l == label)
    }

    /// The diagonal block for block index b.
    pub fn diagonal_block(&self, b: usize) -> Mat<TRat> {
        let (s, e) = self.row_blocks[b];
        let idx: Vec<usize> = (s..e).collect();
        self.entries.sub_matrix(&idx, &idx)
    }

    /// Whether all entries outside the diagonal blocks vanish.
    pub fn is_block_diagonal(&self) -> bool {
        let block_of = |blocks: &[(usize, usize)], i: usize| blocks.iter().position(|&(s, e)| s <= i && i < e);
        (0..self.entries.rows()).all(|i| {
            (0..self.entries.cols()).all(|j| {
                block_of(&self.row_blocks, i) == block_of(&self.col_blocks, j) || self.get(i, j).is_zero()
            })
        })
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Pretty => Ok(self.render_pretty()),
            Format::Csv => self.render_csv(),
            Format::Json => serde_json::to_string_pretty(self).map_err(|e| Error::Parse(e.to_string())),
        }
    }

    /// Text layout with blank entries for zeros and rules between blocks.
    pub fn render_pretty(&self) -> String {
        let cells: Vec<Vec<String>> = (0..self.entries.rows())
            .map(|i| {
                (0..self.entries.cols())
                    .map(|j| {
                        let v = self.get(i, j);
                        if v.is_zero() {
                            ".".to_string()
                        } else {
                            v.render()
                        }
                    })
                    .collect()
            })
            .collect();
        let lw = self.row_labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.entries.cols())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .chain(std::iter::once(self.col_labels[j].chars().count()))
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let col_break = |j: usize| j > 0 && self.col_blocks.iter().any(|&(s, _)| s == j);
        let line = |fields: &[String], label: &str| {
            let mut s = format!("{:<lw$}", label, lw = lw);
            for (j, f) in fields.iter().enumerate() {
                s.push_str(if col_break(j) { " | " } else { "  " });
                let _ = write!(s, "{:>w$}", f, w = widths[j]);
            }
            s.trim_end().to_string()
        };
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&self.title);
            out.push('\n');
        }
        let header = line(&self.col_labels, "");
        let rule: String = "-".repeat(header.chars().count());
        out.push_str(&header);
        out.push('\n');
        out.push_str(&rule);
        out.push('\n');
        for (i, row) in cells.iter().enumerate() {
            if i > 0 && self.row_blocks.iter().any(|&(s, _)| s == i) {
                out.push_str(&rule);
                out.push('\n');
            }
            out.push_str(&line(row, &self.row_labels[i]));
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        let mut header = vec![String::new()];
        header.extend(self.col_labels.iter().cloned());
        w.write_record(&header).map_err(io)?;
        for i in 0..self.entries.rows() {
            let mut rec = vec![self.row_labels[i].clone()];
            rec.extend((0..self.entries.cols()).map(|j| self.get(i, j).render()));
            w.write_record(&rec).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Whether a matrix is block lower triangular for the given blocks.
pub fn is_block_lower_triangular<T: Scalar>(m: &Mat<T>, blocks: &[(usize, usize)]) -> bool {
    let block_of = |i: usize| blocks.iter().position(|&(s, e)| s <= i && i < e).expect("covered");
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| block_of(j) <= block_of(i) || m.get(i, j).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TPoly;

    fn sample() -> LabeledMatrix {
        let e = Mat::from_rows(vec![
            vec![TRat::one(), TRat::zero()],
            vec![TRat::from_poly(TPoly::from_ints(&[0, 1, 1])), TRat::from_int(2)],
        ]);
        LabeledMatrix::square("K", vec!["(2)".into(), "(1^2)".into()], vec![(0, 1), (1, 2)], e)
    }

    #[test]
    fn renderings() {
        let m = sample();
        let p = m.render_pretty();
        assert!(p.contains("t^2 + t"));
        assert!(p.contains(" | "));
        let c = m.render_csv().unwrap();
        assert!(c.lines().nth(2).unwrap().starts_with("(1^2),t^2 + t,2"));
        let j = m.render(Format::Json).unwrap();
        let back: LabeledMatrix = serde_json::from_str(&j).unwrap();
        assert_eq!(back, m);
        assert!(is_block_lower_triangular(&m.entries, &m.row_blocks));
        assert!(!m.is_block_diagonal());
    }
}
