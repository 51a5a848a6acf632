//! Trajectory output as CSV or JSON.

use std::io::{self, Write};

use hamsub_core::lqtraj::Trajectory;
use hamsub_core::SystemQuadruple;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct TrajectoryJson<'a> {
    pub x: &'a [Vec<f64>],
    pub p: &'a [Vec<f64>],
    pub u: &'a [Vec<f64>],
    pub stage_cost: Vec<f64>,
    pub cost: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_residual: Option<f64>,
}

pub fn header(n: usize, m: usize) -> String {
    let mut cols = vec!["k".to_string()];
    cols.extend((1..=n).map(|i| format!("x{i}")));
    cols.extend((1..=n).map(|i| format!("p{i}")));
    cols.extend((1..=m).map(|i| format!("u{i}")));
    cols.push("stage_cost".into());
    cols.join(",")
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// One row per step `k = 0..=k_f`; inputs and stage cost are blank at
/// `k_f`. A final `total` row carries the cost.
pub fn write_csv<W: Write>(
    out: &mut W,
    traj: &Trajectory,
    sys: &SystemQuadruple,
) -> io::Result<()> {
    let (n, m) = (sys.n(), sys.m());
    let stage = traj.stage_costs(sys);
    writeln!(out, "{}", header(n, m))?;
    for (k, (x, p)) in traj.x.iter().zip(&traj.p).enumerate() {
        let mut cells = vec![k.to_string()];
        cells.extend(x.iter().map(|&v| num(v)));
        cells.extend(p.iter().map(|&v| num(v)));
        match traj.u.get(k) {
            Some(u) => {
                cells.extend(u.iter().map(|&v| num(v)));
                cells.push(num(stage[k]));
            }
            None => cells.extend(std::iter::repeat_n(String::new(), m + 1)),
        }
        writeln!(out, "{}", cells.join(","))?;
    }
    let mut total = vec!["total".to_string()];
    total.extend(std::iter::repeat_n(String::new(), 2 * n + m));
    total.push(num(traj.cost));
    writeln!(out, "{}", total.join(","))
}

pub fn write_json<W: Write>(
    out: &mut W,
    traj: &Trajectory,
    sys: &SystemQuadruple,
) -> io::Result<()> {
    let params = traj.params.as_ref();
    let doc = TrajectoryJson {
        x: &traj.x,
        p: &traj.p,
        u: &traj.u,
        stage_cost: traj.stage_costs(sys),
        cost: traj.cost,
        alpha: params.map(|b| b.alpha.as_slice()),
        beta: params.map(|b| b.beta.as_slice()),
        boundary_residual: params.map(|b| b.residual),
    };
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_lists_every_column() {
        assert_eq!(header(2, 1), "k,x1,x2,p1,p2,u1,stage_cost");
    }

    #[test]
    fn numbers_keep_seventeen_digits() {
        let v = 0.1f64 + 0.2;
        assert_eq!(num(v).parse::<f64>().unwrap(), v);
    }
}
