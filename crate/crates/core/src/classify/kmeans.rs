use super::records::WidthRecord;
use crate::error::{Error, Result};
use serde::Serialize;

/// Converged 1-D k-means result. Group ids are assigned in ascending
/// centroid order, so group 0 always holds the smallest widths.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Clustering {
    /// Group id per input record, parallel to the input order.
    pub assignments: Vec<usize>,
    /// Cluster means, ascending.
    pub centroids: Vec<f64>,
    /// Sum of squared distances to assigned centroids.
    pub sse: f64,
    pub iterations: usize,
}

pub fn cluster_widths(records: &[WidthRecord], k: usize) -> Result<Clustering> {
    let widths: Vec<f64> = records.iter().map(|r| r.width).collect();
    cluster_values(&widths, k)
}

/// Lloyd's algorithm on scalars with deterministic quantile initialization:
/// the j-th starting centroid is the distinct sorted value at rank
/// (j + 1/2)·d/k. Iterates to an assignment fixpoint, so the result depends
/// only on the multiset of values, never on input order.
pub fn cluster_values(values: &[f64], k: usize) -> Result<Clustering> {
    if k == 0 {
        return Err(Error::InvalidConfig("cluster count k must be >= 1".into()));
    }
    if k > values.len() {
        return Err(Error::InvalidConfig(format!(
            "cluster count k={k} exceeds record count {}",
            values.len()
        )));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::InvalidConfig(format!("non-finite width {bad}")));
    }

    let mut distinct: Vec<f64> = values.to_vec();
    distinct.sort_by(|a, b| a.partial_cmp(b).unwrap());
    distinct.dedup();
    if distinct.len() < k {
        return Err(Error::FewerDistinctValues {
            distinct: distinct.len(),
            k,
        });
    }

    // Rank stride d/k >= 1 guarantees k distinct starting centroids.
    let d = distinct.len();
    let mut centroids: Vec<f64> = (0..k)
        .map(|j| distinct[((j as f64 + 0.5) * d as f64 / k as f64) as usize])
        .collect();

    // Accumulations run in sorted-value order so sums round identically for
    // any permutation of the input, making the whole result order-invariant
    // bit for bit, not just up to rounding.
    let mut by_value: Vec<usize> = (0..values.len()).collect();
    by_value.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());

    let mut assignments = vec![0usize; values.len()];
    let mut iterations = 0;
    const MAX_ITERATIONS: usize = 1_000;
    loop {
        iterations += 1;
        let mut changed = false;
        for (slot, &v) in assignments.iter_mut().zip(values) {
            let best = nearest(&centroids, v);
            if *slot != best {
                *slot = best;
                changed = true;
            }
        }
        if !changed && iterations > 1 {
            break;
        }

        let mut sums = vec![0.0; k];
        let mut counts = vec![0usize; k];
        for &i in &by_value {
            sums[assignments[i]] += values[i];
            counts[assignments[i]] += 1;
        }
        for (c, (&sum, &count)) in centroids.iter_mut().zip(sums.iter().zip(&counts)) {
            // A cluster that attracted no points keeps its centroid; with
            // quantile starts every centroid coincides with a data value, so
            // this only arises transiently.
            if count > 0 {
                *c = sum / count as f64;
            }
        }
        if iterations >= MAX_ITERATIONS {
            break;
        }
    }

    let mut counts = vec![0usize; k];
    for &group in &assignments {
        counts[group] += 1;
    }
    if counts.contains(&0) {
        return Err(Error::InvalidConfig(format!(
            "k-means converged with an empty cluster (k={k})"
        )));
    }

    // Relabel so group ids follow ascending centroids.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| centroids[a].partial_cmp(&centroids[b]).unwrap());
    let mut relabel = vec![0usize; k];
    for (new_id, &old_id) in order.iter().enumerate() {
        relabel[old_id] = new_id;
    }
    let centroids: Vec<f64> = order.iter().map(|&i| centroids[i]).collect();
    for slot in &mut assignments {
        *slot = relabel[*slot];
    }

    let sse = by_value
        .iter()
        .map(|&i| (values[i] - centroids[assignments[i]]).powi(2))
        .sum();
    Ok(Clustering {
        assignments,
        centroids,
        sse,
        iterations,
    })
}

fn nearest(centroids: &[f64], v: f64) -> usize {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for (i, &c) in centroids.iter().enumerate() {
        let d = (v - c).abs();
        if d < best_d {
            best_d = d;
            best = i;
        }
    }
    best
}
