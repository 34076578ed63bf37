use num_complex::Complex64;

/// Determinant by LU with partial pivoting. Consumes the matrix.
pub(crate) fn determinant(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let (pivot, mag) = (k..n)
            .map(|r| (r, m[r][k].norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty pivot range");
        if mag == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != k {
            m.swap(pivot, k);
            det = -det;
        }
        det *= m[k][k];
        for r in k + 1..n {
            let f = m[r][k] / m[k][k];
            for c in k..n {
                let v = m[k][c];
                m[r][c] -= f * v;
            }
        }
    }
    det
}
