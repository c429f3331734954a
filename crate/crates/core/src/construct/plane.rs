use super::field::FiniteField;
use crate::error::Result;
use crate::family::KSetFamily;
use crate::kset::KSet;

/// Lines of the Desarguesian plane `PG(2, q)` as `(q+1)`-subsets of
/// `[q^2+q+1]`.
///
/// Points are normalised homogeneous triples (first nonzero coordinate one),
/// numbered in lexicographic order of their coordinates. Lines use the same
/// normalisation; a point lies on a line when their dot product vanishes.
pub fn projective_plane(q: u64) -> Result<KSetFamily> {
    let field = FiniteField::new(q)?;
    let triples = normalised_triples(&field);
    let n = triples.len();
    let sets: Vec<KSet> = triples
        .iter()
        .map(|line| {
            triples
                .iter()
                .enumerate()
                .filter(|(_, pt)| dot(&field, line, pt) == 0)
                .map(|(idx, _)| idx + 1)
                .collect()
        })
        .collect();
    KSetFamily::from_ksets(n, q as usize + 1, sets)
}

fn normalised_triples(field: &FiniteField) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in field.elements() {
        for b in field.elements() {
            for c in field.elements() {
                let t = [a, b, c];
                if t.iter().find(|&&x| x != 0) == Some(&1) {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn dot(field: &FiniteField, a: &[usize; 3], b: &[usize; 3]) -> usize {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}
