//! Exact rank and kernel computations for small integer matrices.

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Row-reduce in place (fraction-free, rows kept primitive). Returns the
/// pivot columns.
fn echelon(rows: &mut [Vec<i128>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let (a, b) = (rows[r][c], rows[i][c]);
            let row_r = rows[r].clone();
            for (x, y) in rows[i].iter_mut().zip(&row_r) {
                *x = *x * a - *y * b;
            }
            let g = rows[i].iter().fold(0, |g, &x| gcd(g, x));
            if g > 1 {
                rows[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank over ℚ of the given integer vectors (all of length `cols`).
pub fn rank(vectors: &[Vec<i64>], cols: usize) -> usize {
    let mut rows: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .collect();
    echelon(&mut rows, cols).len()
}

/// A basis of `{ f : ⟨f, v⟩ = 0 for all v }` with primitive integer vectors.
pub fn kernel(vectors: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .collect();
    let pivots = echelon(&mut rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &fc in &free {
        // Solve with the free column set to the product of pivot entries.
        let scale: i128 = pivots
            .iter()
            .enumerate()
            .map(|(r, &pc)| rows[r][pc])
            .fold(1, |acc, x| acc * x.abs() / gcd(acc, x.abs()).max(1));
        let mut f = vec![0i128; cols];
        f[fc] = scale;
        for (r, &pc) in pivots.iter().enumerate() {
            f[pc] = -rows[r][fc] * scale / rows[r][pc];
        }
        let g = f.iter().fold(0, |g, &x| gcd(g, x));
        out.push(f.iter().map(|&x| (x / g) as i64).collect());
    }
    out
}
