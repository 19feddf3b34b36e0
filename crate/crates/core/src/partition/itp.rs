//! Iterated tour partitioning of a cycle through the super depot `o`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::instance::{SuperDepotView, Variant};
use crate::solution::Visit;
use crate::tsp::HamCycle;

/// Tours in H, all starting and ending at `o`, listed as customer visits.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SegmentPlan {
    /// Winning phase offset of the underlying partition.
    pub phase: u64,
    /// Segment capacity the partition ran with.
    pub capacity: u64,
    pub segments: Vec<Vec<Visit>>,
    /// Weight of all segments under `c`.
    pub total_cost: f64,
}

/// Weight of the closed walk `o → visits → o` under `c`.
pub fn segment_cost(view: &SuperDepotView, visits: &[Visit]) -> f64 {
    let o = view.depot();
    let mut prev = o;
    let mut cost = 0.0;
    for v in visits {
        cost += view.c(prev, v.customer);
        prev = v.customer;
    }
    cost + view.c(prev, o)
}

/// Customers of `cycle` in cycle order, starting right after `o`.
/// A cycle that does not pass through `o` is read from its first vertex.
pub fn customers_after_depot(view: &SuperDepotView, cycle: &HamCycle) -> Vec<usize> {
    let o = view.depot();
    let order = if cycle.order.contains(&o) { cycle.rotated_to(o) } else { cycle.order.clone() };
    order.into_iter().filter(|&v| v != o).collect()
}

/// Cuts the demand stream of `order` at positions `phase + jQ`.
fn segments_for_phase(order: &[(usize, u64)], q: u64, phase: u64) -> Vec<Vec<Visit>> {
    let mut segments = Vec::new();
    let mut current: Vec<Visit> = Vec::new();
    let mut next = if phase == 0 { q } else { phase };
    let mut start = 0u64;
    for &(v, amount) in order {
        let end = start + amount;
        let mut pos = start;
        while next < end {
            if next > pos {
                current.push(Visit::new(v, next - pos));
            }
            if !current.is_empty() {
                segments.push(core::mem::take(&mut current));
            }
            pos = next;
            next += q;
        }
        current.push(Visit::new(v, end - pos));
        if next == end {
            segments.push(core::mem::take(&mut current));
            next += q;
        }
        start = end;
    }
    if !current.is_empty() {
        segments.push(current);
    }
    segments
}

fn plan_cost(view: &SuperDepotView, segments: &[Vec<Visit>]) -> f64 {
    segments.iter().map(|s| segment_cost(view, s)).sum()
}

/// Best-of-all-phases partition of `order` (customer, amount) with segment
/// capacity `q`. Ties go to the lowest phase.
pub(crate) fn best_phase(view: &SuperDepotView, order: &[(usize, u64)], q: u64) -> SegmentPlan {
    let total: u64 = order.iter().map(|&(_, a)| a).sum();
    let phases = q.min(total.max(1));
    let mut best: Option<SegmentPlan> = None;
    for phase in 0..phases {
        let segments = segments_for_phase(order, q, phase);
        let total_cost = plan_cost(view, &segments);
        if best.as_ref().is_none_or(|b| total_cost < b.total_cost) {
            best = Some(SegmentPlan { phase, capacity: q, segments, total_cost });
        }
    }
    best.unwrap_or(SegmentPlan { phase: 0, capacity: q, segments: Vec::new(), total_cost: 0.0 })
}

/// Every phase's segmentation with its cost, for inspection and testing.
pub fn all_phases(view: &SuperDepotView, cycle: &HamCycle, capacity: u64) -> Vec<(u64, f64)> {
    let order: Vec<(usize, u64)> =
        customers_after_depot(view, cycle).into_iter().map(|v| (v, view.demands()[v])).collect();
    (0..capacity).map(|p| (p, plan_cost(view, &segments_for_phase(&order, capacity, p)))).collect()
}

/// ITP on `cycle` with segment capacity `capacity`.
///
/// The splittable variant may divide a customer between two consecutive
/// segments; for unit demand every customer is one unit anyway.
pub fn itp_split(view: &SuperDepotView, cycle: &HamCycle, capacity: u64, variant: Variant) -> Result<SegmentPlan> {
    if capacity == 0 {
        return Err(Error::ZeroCapacity);
    }
    if variant == Variant::Unsplittable {
        return Err(Error::UnsupportedVariant { operation: "itp_split", variant });
    }
    let mut order = Vec::new();
    for v in customers_after_depot(view, cycle) {
        let d = view.demands()[v];
        if d > capacity {
            return Err(Error::DemandAboveCapacity { customer: v, demand: d, capacity });
        }
        order.push((v, d));
    }
    Ok(best_phase(view, &order, capacity))
}

/// Where a customer split across segments ends up.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Assign {
    /// The first segment holding a piece.
    Earliest,
    /// The segment holding the largest piece, earliest on ties.
    Largest,
}

/// Moves each split customer wholly into one segment, delivering
/// `real[v]`, and drops segments left empty.
fn reassign(
    view: &SuperDepotView,
    plan: SegmentPlan,
    real: impl Fn(usize) -> u64,
    rule: impl Fn(usize) -> Assign,
) -> SegmentPlan {
    let n = view.num_customers();
    let mut target = vec![usize::MAX; n];
    let mut best_piece = vec![0u64; n];
    for (s, seg) in plan.segments.iter().enumerate() {
        for visit in seg {
            let v = visit.customer;
            let take = match rule(v) {
                Assign::Earliest => target[v] == usize::MAX,
                Assign::Largest => target[v] == usize::MAX || visit.amount > best_piece[v],
            };
            if take {
                target[v] = s;
                best_piece[v] = visit.amount;
            }
        }
    }
    let segments: Vec<Vec<Visit>> = plan
        .segments
        .iter()
        .enumerate()
        .map(|(s, seg)| {
            seg.iter()
                .filter(|visit| target[visit.customer] == s)
                .map(|visit| Visit::new(visit.customer, real(visit.customer)))
                .collect::<Vec<_>>()
        })
        .filter(|seg: &Vec<Visit>| !seg.is_empty())
        .collect();
    let total_cost = plan_cost(view, &segments);
    SegmentPlan { phase: plan.phase, capacity: plan.capacity, segments, total_cost }
}

/// Appends trivial segments for `big` (in the given order) to `plan`.
fn with_trivial(view: &SuperDepotView, mut plan: SegmentPlan, big: &[usize]) -> SegmentPlan {
    for &v in big {
        let seg = vec![Visit::new(v, view.demands()[v])];
        plan.total_cost += segment_cost(view, &seg);
        plan.segments.push(seg);
    }
    plan
}

/// Unsplittable ITP for even `k`: customers above `k/2` ride alone, the rest
/// are partitioned with capacity `k/2` and each split customer is handed
/// wholly to the earlier of its two segments.
pub fn uitp_split(view: &SuperDepotView, cycle: &HamCycle, k: u64) -> Result<SegmentPlan> {
    if k % 2 == 1 {
        return Err(Error::OddCapacity { capacity: k });
    }
    let half = k / 2;
    let d = view.demands();
    let mut big = Vec::new();
    let mut order = Vec::new();
    for v in customers_after_depot(view, cycle) {
        if d[v] > k {
            return Err(Error::DemandAboveCapacity { customer: v, demand: d[v], capacity: k });
        }
        if d[v] > half {
            big.push(v);
        } else {
            order.push((v, d[v]));
        }
    }
    let plan = best_phase(view, &order, half);
    let plan = reassign(view, plan, |v| d[v], |_| Assign::Earliest);
    Ok(with_trivial(view, plan, &big))
}

/// Unsplittable ITP with big-customer threshold `δk`.
///
/// Customers with `2d(v) ≥ k` ride alone. Among the rest, customers with
/// `d(v) ≥ δk` count twice their demand. The stream is partitioned with
/// capacity `k - ⌈δ'k⌉ + 1`, `δ' = min(δ, 1/2)`; a split small customer
/// goes to its earlier segment, a split big one to the segment holding its
/// largest piece. Every tour then carries at most `k`, and the cost is at
/// most `(1/(1-δ))(2/k)Δ_s + (1/(1-δ))(4/k)Δ_b + c(C)`.
pub fn delta_uitp(view: &SuperDepotView, cycle: &HamCycle, k: u64, delta: f64) -> Result<SegmentPlan> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidParameter { name: "delta", value: delta });
    }
    let d = view.demands();
    let dk = delta * k as f64;
    let is_big = |v: usize| d[v] as f64 >= dk - crate::EPS;
    let reserve = libm::ceil(delta.min(0.5) * k as f64 - crate::EPS) as u64;
    let q = (k + 1).saturating_sub(reserve).max(1);
    let mut alone = Vec::new();
    let mut order = Vec::new();
    for v in customers_after_depot(view, cycle) {
        if d[v] > k {
            return Err(Error::DemandAboveCapacity { customer: v, demand: d[v], capacity: k });
        }
        if 2 * d[v] >= k {
            alone.push(v);
        } else if is_big(v) {
            order.push((v, 2 * d[v]));
        } else {
            order.push((v, d[v]));
        }
    }
    let plan = best_phase(view, &order, q);
    let plan = reassign(view, plan, |v| d[v], |v| if is_big(v) { Assign::Largest } else { Assign::Earliest });
    Ok(with_trivial(view, plan, &alone))
}
