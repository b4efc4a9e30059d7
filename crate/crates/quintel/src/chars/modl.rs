//! Dense linear algebra over the prime field F_241.
//!
//! 241 is the smallest prime p with p = 1 mod 120, so F_241 contains a
//! primitive m-th root of unity for every exponent m arising here, and
//! 241 divides none of our group orders.  Entries are `u64` residues.

/// The working prime.
pub const ELL: u64 = 241;

pub fn add(a: u64, b: u64) -> u64 {
    (a + b) % ELL
}

pub fn sub(a: u64, b: u64) -> u64 {
    (a + ELL - b % ELL) % ELL
}

pub fn mul(a: u64, b: u64) -> u64 {
    a * b % ELL
}

pub fn pow(mut base: u64, mut e: u64) -> u64 {
    base %= ELL;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

/// Inverse by Fermat; panics on zero.
pub fn inv(a: u64) -> u64 {
    assert!(a % ELL != 0, "division by zero in F_241");
    pow(a, ELL - 2)
}

/// The smallest primitive root modulo 241: the least g whose order is not
/// a proper divisor of 240, checked against 240/q for each prime q | 240.
pub fn primitive_root() -> u64 {
    'outer: for g in 2..ELL {
        for q in [2u64, 3, 5] {
            if pow(g, 240 / q) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("241 is prime, so a primitive root exists")
}

/// Row-major dense matrix over F_241.
pub type Mat = Vec<Vec<u64>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (n, k) = (a.len(), b.len());
    let m = b[0].len();
    let mut out = vec![vec![0u64; m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = (out[i][j] + x * b[l][j]) % ELL;
            }
        }
    }
    out
}

/// In-place reduction to row echelon form; returns pivot column indices.
fn echelonize(m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let s = inv(m[r][c]);
        for j in c..cols {
            m[r][j] = mul(m[r][j], s);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in c..cols {
                    m[i][j] = sub(m[i][j], mul(f, m[r][j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis (as column vectors) of the kernel of `a`.
pub fn nullspace(a: &Mat) -> Vec<Vec<u64>> {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let mut m = a.clone();
    let pivots = echelonize(&mut m);
    let mut basis = Vec::new();
    let mut pivot_of_col = vec![usize::MAX; cols];
    for (row, &c) in pivots.iter().enumerate() {
        pivot_of_col[c] = row;
    }
    for free in 0..cols {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = sub(0, m[row][free]);
        }
        basis.push(v);
    }
    basis
}

/// Solves `B X = Y` where the columns of `B` (an r x d matrix of full
/// column rank) are a basis and every column of `Y` lies in their span.
/// Returns the d x k coordinate matrix, or None if some column of `Y`
/// falls outside the span.
pub fn solve_in_basis(b: &Mat, y: &Mat) -> Option<Mat> {
    let r = b.len();
    let d = if r == 0 { 0 } else { b[0].len() };
    let k = if r == 0 { 0 } else { y[0].len() };
    let mut aug: Mat = (0..r)
        .map(|i| {
            let mut row = Vec::with_capacity(d + k);
            row.extend_from_slice(&b[i]);
            row.extend_from_slice(&y[i]);
            row
        })
        .collect();
    let pivots = echelonize(&mut aug);
    if pivots.len() != d || pivots.iter().any(|&c| c >= d) {
        return None; // basis not full rank, or some y outside the span
    }
    let mut x = vec![vec![0u64; k]; d];
    for (row, &c) in pivots.iter().enumerate() {
        x[c].copy_from_slice(&aug[row][d..]);
    }
    // rows of `aug` beyond the pivots must be zero in the Y block
    for row in aug.iter().skip(d) {
        if row[d..].iter().any(|&v| v != 0) {
            return None;
        }
    }
    Some(x)
}
