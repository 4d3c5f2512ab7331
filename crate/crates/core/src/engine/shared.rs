use crate::error::{Error, Result};
use crate::laurent::{det_laurent, LaurentPoly, MonomialUnit};
use crate::scalar::ExactScalar;

/// The 2s×2s determinant with row i equal to
/// `(a_i0, …, a_i,s−1, a_i0·h_i, …, a_i,s−1·h_i)`, over the Laurent ring.
pub fn shared_determinant(a: &[Vec<ExactScalar>], h: &[MonomialUnit]) -> Result<LaurentPoly> {
    let s = a.first().map_or(0, Vec::len);
    if s == 0 || a.len() != 2 * s || a.iter().any(|r| r.len() != s) {
        return Err(Error::Shape(format!("expected a 2s×s matrix, got {} rows of lengths {:?}", a.len(), a.iter().map(Vec::len).collect::<Vec<_>>())));
    }
    if h.len() != a.len() {
        return Err(Error::Shape(format!("{} rows but {} units", a.len(), h.len())));
    }
    let dim = h[0].dim();
    if let Some(bad) = h.iter().find(|u| u.dim() != dim) {
        return Err(Error::Dimension { expected: dim, got: bad.dim() });
    }
    let m: Vec<Vec<LaurentPoly>> = a
        .iter()
        .zip(h)
        .map(|(row, u)| {
            let hp = u.to_poly();
            let plain = row.iter().map(|x| LaurentPoly::constant(dim, x.clone()));
            let scaled = row.iter().map(|x| hp.scale(x));
            plain.chain(scaled).collect()
        })
        .collect();
    det_laurent(&m)
}
