//! Dense matrices over a finite field with labelled columns.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldSpec};
use crate::subset::{Ground, Label, Subset};

/// A row-major matrix over `field`. Column labels travel with the matrix so
/// ground sets of derived matroids stay aligned with column indices.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
    labels: Ground,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix over {} ({}x{}) labels {:?}", self.field.spec(), self.rows, self.cols, self.labels)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    /// Builds a matrix from encoded field values. Labels default to `1..=cols`.
    pub fn new(field: &Field, rows: usize, cols: usize, entries: Vec<u32>, labels: Option<Ground>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if let Some(&bad) = entries.iter().find(|&&v| v >= field.order()) {
            return Err(Error::Shape(format!("entry {bad} is not an element of {}", field.spec())));
        }
        let labels = match labels {
            Some(g) if g.len() != cols => {
                return Err(Error::Shape(format!("{} labels for {cols} columns", g.len())));
            }
            Some(g) => g,
            None => Ground::numbered(cols),
        };
        Ok(Matrix { field: field.clone(), rows, cols, entries, labels })
    }

    /// Rows of integers mapped through the prime-subfield embedding, so `-1`
    /// is accepted. Labels are `1..=cols`.
    pub fn from_ints(field: &Field, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let entries = rows.iter().flatten().map(|&v| field.from_int(v)).collect();
        Matrix::new(field, rows.len(), cols, entries, None)
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix::new(field, rows, cols, vec![0; rows * cols], None).expect("shape is consistent")
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn labels(&self) -> &Ground {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Ground) -> Result<Self> {
        if labels.len() != self.cols {
            return Err(Error::Shape(format!("{} labels for {} columns", labels.len(), self.cols)));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Columns indexed by `x`, labels and column order preserved.
    pub fn submatrix_cols<I, L>(&self, x: I) -> Result<Matrix>
    where
        I: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        let mut mask = Subset::EMPTY;
        for l in x {
            let l = l.into();
            let i = self.labels.index_of(&l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            mask = mask.with(i);
        }
        Ok(self.select_cols(mask))
    }

    pub fn select_cols(&self, mask: Subset) -> Matrix {
        let idx = mask.indices();
        let mut entries = Vec::with_capacity(self.rows * idx.len());
        for r in 0..self.rows {
            entries.extend(idx.iter().map(|&c| self.get(r, c)));
        }
        let labels = Ground::new(self.labels.labels_of(mask)).expect("subset of distinct labels");
        Matrix { field: self.field.clone(), rows: self.rows, cols: idx.len(), entries, labels }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field.clone(), rows: rows.len(), cols: self.cols, entries, labels: self.labels.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Stacks `other` below `self`; column labels are taken from `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::Shape("vstack needs equal fields and column counts".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, entries, labels: self.labels.clone() })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out.labels = other.labels.clone();
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.labels.full())
    }

    /// Rank of the columns in `mask`, by elimination on a scratch copy.
    pub fn rank_of(&self, mask: Subset) -> usize {
        let idx = mask.indices();
        let w = idx.len();
        if w == 0 || self.rows == 0 {
            return 0;
        }
        let mut a = Vec::with_capacity(self.rows * w);
        for r in 0..self.rows {
            a.extend(idx.iter().map(|&c| self.get(r, c)));
        }
        eliminate(&self.field, &mut a, self.rows, w, false).len()
    }

    /// Reduced row-echelon form (zero rows kept at the bottom) and the labels
    /// of the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<Label>) {
        let mut a = self.entries.clone();
        let pivots = eliminate(&self.field, &mut a, self.rows, self.cols, true);
        let labels = pivots.iter().map(|&c| self.labels.label(c).clone()).collect();
        let m = Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries: a, labels: self.labels.clone() };
        (m, labels)
    }

    /// A basis of the row space as a `rank x cols` matrix.
    pub fn row_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        r.select_rows(&keep)
    }

    /// A basis of `{v : self * v = 0}` as rows of a `(cols - rank) x cols`
    /// matrix. Its row space is the orthogonal complement of the row space.
    pub fn null_space(&self) -> Matrix {
        let (r, pivot_labels) = self.rref();
        let pivots: Vec<usize> = pivot_labels.iter().map(|l| self.labels.index_of(l).unwrap()).collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = &self.field;
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            out.set(row, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(row, pc, f.neg(r.get(pr, fc)));
            }
        }
        out.labels = self.labels.clone();
        out
    }

    pub fn is_zero_column(&self, c: usize) -> bool {
        (0..self.rows).all(|r| self.get(r, c) == 0)
    }

    /// `message * self` for a message of length `rows`.
    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (r, &m) in message.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(m, self.get(r, c)));
            }
        }
        out
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            field: self.field.spec().clone(),
            rows: self.rows,
            cols: self.cols,
            labels: self.labels.labels().to_vec(),
            entries: (0..self.rows)
                .map(|r| self.row(r).iter().map(|&v| self.field.element_to_json(v)).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<Self> {
        let field = Field::from_spec(&j.field)?;
        if j.entries.len() != j.rows || j.entries.iter().any(|r| r.len() != j.cols) {
            return Err(Error::Shape(format!("entries do not form a {}x{} array", j.rows, j.cols)));
        }
        let mut entries = Vec::with_capacity(j.rows * j.cols);
        for row in &j.entries {
            for v in row {
                entries.push(field.element_from_json(v)?);
            }
        }
        let labels = if j.labels.is_empty() && j.cols > 0 { None } else { Some(Ground::new(j.labels.clone())?) };
        Matrix::new(&field, j.rows, j.cols, entries, labels)
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        Matrix::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// Wire format for matrices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    #[serde(default)]
    pub labels: Vec<Label>,
    pub entries: Vec<Vec<Value>>,
}

/// Gauss-Jordan elimination in place on a `rows x cols` row-major buffer.
/// Returns the pivot columns. With `full` the pivot rows are normalised and
/// cleared above as well as below.
fn eliminate(f: &Field, a: &mut [u32], rows: usize, cols: usize, full: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(a[r * cols + c]).expect("pivot is nonzero");
        if full {
            for j in c..cols {
                a[r * cols + j] = f.mul(a[r * cols + j], inv);
            }
        }
        let start = if full { 0 } else { r + 1 };
        for i in start..rows {
            if i == r {
                continue;
            }
            let v = a[i * cols + c];
            if v == 0 {
                continue;
            }
            let factor = if full { v } else { f.mul(v, inv) };
            for j in c..cols {
                let t = f.mul(factor, a[r * cols + j]);
                a[i * cols + j] = f.sub(a[i * cols + j], t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
