use gatetime_core::linalg::{eigh, CMatrix};
use num_complex::Complex64;
use std::time::Instant;

fn rand_herm(n: usize, seed: u64) -> CMatrix {
    let mut s = seed;
    let mut next = move || {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((s >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
    };
    let mut m = CMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = Complex64::new(next(), 0.0);
        for j in (i + 1)..n {
            let z = Complex64::new(next(), next());
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

fn main() {
    for &n in &[4usize, 8, 16, 32] {
        let mats: Vec<CMatrix> = (0..200).map(|k| rand_herm(n, k as u64 + 1)).collect();
        let t0 = Instant::now();
        let mut acc = 0.0;
        for m in &mats {
            let e = eigh(m);
            acc += e.eigenvalues[0];
        }
        let dt = t0.elapsed().as_secs_f64() / mats.len() as f64;
        let t1 = Instant::now();
        let a = &mats[0];
        let b = &mats[1];
        let mut c = CMatrix::zeros(n, n);
        for _ in 0..1000 { a.mul_to(b, &mut c); }
        let dtm = t1.elapsed().as_secs_f64() / 1000.0;
        println!("N={n:3}  eigh {:9.2} us   matmul {:7.2} us  ({acc:.3})", dt * 1e6, dtm * 1e6);
    }
}
