#![allow(dead_code)]

use hamsub_core::matcore::{pivoted_qr, rank, Matrix};
use hamsub_core::riccati::solve_dare_restricted;
use hamsub_core::{staircase, SystemQuadruple, ToleranceConfig};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, rows: usize, cols: usize, scale: f64) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| rng.gen_range(-1.0..1.0) * scale)
        .collect();
    Matrix::from_row_major(rows, cols, data).unwrap()
}

pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    pivoted_qr(&uniform(rng, n, n, 1.0)).q
}

/// Scales `m` so that its Frobenius norm (an upper bound on the spectral
/// radius) equals `radius`.
pub fn with_radius_bound(m: Matrix, radius: f64) -> Matrix {
    let f = m.norm_fro();
    if f == 0.0 {
        m
    } else {
        m.scale(radius / f)
    }
}

/// Feedthrough with `D'D` regular or of rank `m - 1`.
pub fn random_feedthrough(rng: &mut ChaCha8Rng, p: usize, m: usize, singular: bool) -> Matrix {
    let mut d = uniform(rng, p, m, 1.0);
    if singular {
        let j = rng.gen_range(0..m);
        for i in 0..p {
            d[(i, j)] = 0.0;
        }
    }
    d
}

/// Generic plant; `A` may be unstable.
pub fn random_system(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    p: usize,
    singular: bool,
) -> SystemQuadruple {
    let a = uniform(rng, n, n, 1.3 / (n as f64).sqrt());
    let b = uniform(rng, n, m, 1.0);
    let c = uniform(rng, p, n, 1.0);
    let d = random_feedthrough(rng, p, m, singular);
    SystemQuadruple::new(a, b, c, d).unwrap()
}

/// Dimensions with `n <= 6` and `m <= p <= 3`. With `p < m` the weight
/// `D'D + B'PB` is generically singular, which the pipeline rejects.
pub fn random_dims(rng: &mut ChaCha8Rng) -> (usize, usize, usize) {
    let m = rng.gen_range(1..=3);
    (rng.gen_range(1..=6), m, rng.gen_range(m..=3))
}

/// A random system from [`random_dims`], singular in `D` half the time.
pub fn random_plant(rng: &mut ChaCha8Rng) -> SystemQuadruple {
    let (n, m, p) = random_dims(rng);
    let singular = rng.gen_bool(0.5);
    random_system(rng, n, m, p, singular)
}

pub struct Constructed {
    pub sys: SystemQuadruple,
    pub n_c: usize,
    /// Rows of `A_u` that were zeroed (staircase coordinates).
    pub zero_rows: Vec<usize>,
}

/// A staircase-form plant with `n_c` reachable and `n_u` unreachable states
/// (`A_u` stable), optionally rotated by a random orthogonal matrix.
pub fn random_with_unreachable(
    rng: &mut ChaCha8Rng,
    n_c: usize,
    n_u: usize,
    m: usize,
    p: usize,
    zero_rows: usize,
    rotate: bool,
) -> Constructed {
    let n = n_c + n_u;
    let mut a = Matrix::zeros(n, n);
    a.set_block(0, 0, &uniform(rng, n_c, n_c, 1.3 / (n_c as f64).sqrt()));
    a.set_block(0, n_c, &uniform(rng, n_c, n_u, 1.0));
    let mut a_u = with_radius_bound(uniform(rng, n_u, n_u, 1.0), rng.gen_range(0.2..0.9));
    let mut zeroed = Vec::new();
    while zeroed.len() < zero_rows.min(n_u) {
        let r = rng.gen_range(0..n_u);
        if !zeroed.contains(&r) {
            zeroed.push(r);
        }
    }
    zeroed.sort_unstable();
    for &r in &zeroed {
        for j in 0..n_u {
            a_u[(r, j)] = 0.0;
        }
    }
    a.set_block(n_c, n_c, &a_u);
    let mut b = Matrix::zeros(n, m);
    b.set_block(0, 0, &uniform(rng, n_c, m, 1.0));
    let c = uniform(rng, p, n, 1.0);
    let singular = rng.gen_bool(0.5);
    let d = random_feedthrough(rng, p, m, singular);
    let mut sys = SystemQuadruple::new(a, b, c, d).unwrap();
    if rotate {
        // x = Q' z: the construction coordinates are z.
        sys = sys.transformed(&random_orthogonal(rng, n).transpose());
    }
    Constructed {
        sys,
        n_c,
        zero_rows: zeroed,
    }
}

/// True if `A_c + B_c K_c` of the restricted problem is nonsingular.
pub fn restricted_closed_loop_nonsingular(sys: &SystemQuadruple, cfg: &ToleranceConfig) -> bool {
    let Ok(st) = staircase(sys, cfg) else {
        return false;
    };
    let Ok(r) = solve_dare_restricted(&st, &sys.d, cfg) else {
        return false;
    };
    rank(&r.a_kc, cfg).map(|k| k == st.n_c).unwrap_or(false)
}

pub fn rel(x: f64, scale: f64) -> f64 {
    x / (1.0 + scale)
}

/// Magnitude of the terms entering the six Hamiltonian identities.
pub fn identity_scale(
    sys: &SystemQuadruple,
    ric: &hamsub_core::RiccatiSolution,
    gram: &hamsub_core::GramianSolution,
) -> f64 {
    let data = sys.a.norm_fro() + sys.b.norm_fro() + sys.c.norm_fro() + sys.d.norm_fro();
    let sol = ric.p.norm_fro() + ric.k.norm_fro() + gram.w.norm_fro();
    (1.0 + data) * (1.0 + data) * (1.0 + sol)
}

/// Sum of the norms of the four terms of the algebraic Riccati equation.
pub fn dare_scale(sys: &SystemQuadruple, p: &Matrix) -> f64 {
    let cfg = ToleranceConfig::default();
    let at = sys.a.transpose();
    let atpa = &(&at * p) * &sys.a;
    let ctc = &sys.c.transpose() * &sys.c;
    let cross = &(&(&at * p) * &sys.b) + &(&sys.c.transpose() * &sys.d);
    let rw = &(&sys.d.transpose() * &sys.d) + &(&(&sys.b.transpose() * p) * &sys.b);
    let quad = hamsub_core::matcore::solve_linear(&rw, &cross.transpose(), &cfg)
        .map(|x| (&cross * &x).norm_fro())
        .unwrap_or(f64::INFINITY);
    1.0 + atpa.norm_fro() + ctc.norm_fro() + quad + p.norm_fro()
}

/// [`random_with_unreachable`] with `n_c <= 4`, `1 <= n_u <= 3`,
/// `m <= p <= 3`.
pub fn random_constructed(rng: &mut ChaCha8Rng, zero_rows: usize, rotate: bool) -> Constructed {
    let n_c = rng.gen_range(1..=4);
    let n_u = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=2);
    let p = rng.gen_range(m..=3);
    random_with_unreachable(rng, n_c, n_u, m, p, zero_rows, rotate)
}

/// Plant for the trajectory suites: `n <= 5`, `m < p <= 3`. With `p = m`
/// and `D` invertible the plant has invariant zeros, and zero-cost
/// trajectories grow like the largest zero to the power `k_f`; no 1e-8
/// agreement is attainable then in double precision.
pub fn trajectory_plant(rng: &mut ChaCha8Rng, singular: bool) -> SystemQuadruple {
    let n = rng.gen_range(1..=5);
    let m = rng.gen_range(1..=2);
    let p = rng.gen_range(m + 1..=3);
    random_system(rng, n, m, p, singular)
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

/// Terminal state reached from `x0` under a random control sequence, and
/// that sequence's cost.
pub fn reachable_target(
    rng: &mut ChaCha8Rng,
    sys: &SystemQuadruple,
    x0: &[f64],
    horizon: usize,
) -> (Vec<f64>, f64) {
    let mut x = x0.to_vec();
    let mut j = 0.0;
    for _ in 0..horizon {
        let u = random_vector(rng, sys.m());
        let y: Vec<f64> = sys
            .c
            .mul_vec(&x)
            .iter()
            .zip(sys.d.mul_vec(&u))
            .map(|(a, b)| a + b)
            .collect();
        j += y.iter().map(|v| v * v).sum::<f64>();
        x = sys
            .a
            .mul_vec(&x)
            .iter()
            .zip(sys.b.mul_vec(&u))
            .map(|(a, b)| a + b)
            .collect();
    }
    (x, j)
}

/// `1 +` the largest entry of `x`, `p` and `u`.
pub fn trajectory_scale(t: &hamsub_core::lqtraj::Trajectory) -> f64 {
    let all = t.x.iter().chain(&t.p).chain(&t.u).flatten();
    1.0 + all.fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Largest entrywise gap between two trajectories in `x`, `p` and `u`.
pub fn trajectory_gap(
    a: &hamsub_core::lqtraj::Trajectory,
    b: &hamsub_core::lqtraj::Trajectory,
) -> f64 {
    let pairs = |x: &Vec<Vec<f64>>, y: &Vec<Vec<f64>>| {
        x.iter()
            .flatten()
            .zip(y.iter().flatten())
            .fold(0.0f64, |m, (p, q)| m.max((p - q).abs()))
    };
    pairs(&a.x, &b.x)
        .max(pairs(&a.p, &b.p))
        .max(pairs(&a.u, &b.u))
}

/// `cond([B, AB, ..., A^{steps-1} B]) <= bound`. Nearly unreachable modes make
/// the closed-form boundary parameters large and cancelling, which costs
/// accuracy in proportion to this condition number.
pub fn well_reachable(sys: &SystemQuadruple, steps: usize, bound: f64) -> bool {
    let cfg = ToleranceConfig::default();
    let mut blocks = vec![sys.b.clone()];
    for _ in 1..steps {
        let next = &sys.a * blocks.last().unwrap();
        blocks.push(next);
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let s = hamsub_core::matcore::singular_values(&Matrix::hstack(&refs), &cfg).unwrap();
    let smin = s[s.len() - 1];
    smin > 0.0 && s[0] / smin <= bound
}

/// Reachability condition bound used by the trajectory suites.
pub const REACH_COND: f64 = 100.0;
