use super::field::{Elem, Field};

/// A subspace of `F^n`, kept as a fully reduced echelon basis.
///
/// Every basis row has a 1 at its pivot column and zeros at all other
/// pivot columns, so the coordinates of a member vector are its entries at
/// the pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut e = vec![0; ambient];
            e[i] = 1;
            s.insert(&e);
        }
        s
    }

    pub fn spanned_by<'a>(field: Field, ambient: usize, vectors: impl IntoIterator<Item = &'a Vec<Elem>>) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the basis onto the pivot columns.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                for (a, &b) in w.iter_mut().zip(row) {
                    *a ^= f.mul(c, b);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates with respect to the echelon basis, if `v` is a member.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let f = self.field;
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|&x| x != 0) else { return false };
        let inv = f.inv(w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(inv, *x);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (a, &b) in row.iter_mut().zip(&w) {
                    *a ^= f.mul(c, b);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_reconstruct_members() {
        let f = Field::new(2).unwrap();
        let a = vec![1, 2, 0, 3];
        let b = vec![0, 1, 1, 1];
        let s = Subspace::spanned_by(f, 4, [&a, &b]);
        assert_eq!(s.dim(), 2);
        let v: Vec<Elem> = a.iter().zip(&b).map(|(&x, &y)| f.mul(2, x) ^ f.mul(3, y)).collect();
        let c = s.coords(&v).unwrap();
        let mut back = vec![0; 4];
        for (coef, row) in c.iter().zip(s.basis()) {
            for (o, &r) in back.iter_mut().zip(row) {
                *o ^= f.mul(*coef, r);
            }
        }
        assert_eq!(back, v);
        assert!(!s.contains(&[0, 0, 0, 1]));
    }
}
