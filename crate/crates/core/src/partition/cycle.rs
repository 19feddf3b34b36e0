//! Turning super-depot segments into fixed-destination tours in G.

use alloc::vec::Vec;

use super::itp::{itp_split, uitp_split, SegmentPlan};
use crate::error::{Error, Result};
use crate::instance::{Instance, SuperDepotView, Variant};
use crate::solution::{Solution, Tour, Visit};
use crate::tsp::HamCycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    Depot(usize),
    Customer(usize, u64),
}

/// A walk `u_s v_i … v_j u_t` between two depots through customers only.
#[derive(Debug, Clone, PartialEq)]
pub struct OpenWalk {
    pub start: usize,
    pub visits: Vec<Visit>,
    pub end: usize,
}

impl OpenWalk {
    pub fn from_nodes(nodes: &[Node]) -> Result<Self> {
        let (Some(Node::Depot(start)), Some(Node::Depot(end))) = (nodes.first(), nodes.last()) else {
            return Err(Error::MalformedWalk { reason: "walk must start and end at a depot" });
        };
        if nodes.len() < 3 {
            return Err(Error::MalformedWalk { reason: "walk has no customer" });
        }
        let mut visits = Vec::with_capacity(nodes.len() - 2);
        for node in &nodes[1..nodes.len() - 1] {
            match *node {
                Node::Customer(v, amount) => visits.push(Visit::new(v, amount)),
                Node::Depot(_) => return Err(Error::MalformedWalk { reason: "depot in the interior" }),
            }
        }
        Ok(Self { start: *start, visits, end: *end })
    }

    /// Length in G.
    pub fn weight(&self, instance: &Instance) -> f64 {
        let w = instance.weights();
        let (Some(first), Some(last)) = (self.visits.first(), self.visits.last()) else {
            return 0.0;
        };
        instance.depot_distance(self.start, first.customer)
            + self.visits.windows(2).map(|p| w.get(p[0].customer, p[1].customer)).sum::<f64>()
            + instance.depot_distance(self.end, last.customer)
    }
}

/// Closes an open walk at whichever end depot gives the cheaper tour,
/// `u_s` on ties. Closed walks are returned as they are.
pub fn fix_open_walk(instance: &Instance, walk: &OpenWalk) -> Tour {
    if walk.start == walk.end {
        return Tour::new(instance, walk.start, walk.visits.clone());
    }
    let at_start = Tour::new(instance, walk.start, walk.visits.clone());
    let at_end = Tour::new(instance, walk.end, walk.visits.clone());
    if at_end.weight < at_start.weight {
        at_end
    } else {
        at_start
    }
}

/// Expands one H segment into walks in G: edges at `o` go to the anchor
/// depot, and a dummy edge `v v'` becomes `v anchor(v)` plus
/// `anchor(v') v'`, which splits the walk.
pub fn expand_segment(view: &SuperDepotView, segment: &[Visit]) -> Vec<OpenWalk> {
    let mut walks = Vec::new();
    let Some(first) = segment.first() else {
        return walks;
    };
    let mut current = OpenWalk { start: view.anchor(first.customer), visits: Vec::new(), end: 0 };
    for (i, visit) in segment.iter().enumerate() {
        if i > 0 {
            let prev = segment[i - 1].customer;
            if view.is_dummy(prev, visit.customer) {
                current.end = view.anchor(prev);
                walks.push(core::mem::replace(
                    &mut current,
                    OpenWalk { start: view.anchor(visit.customer), visits: Vec::new(), end: 0 },
                ));
            }
        }
        current.visits.push(*visit);
    }
    current.end = view.anchor(segment[segment.len() - 1].customer);
    walks.push(current);
    walks
}

/// Tours in G for every segment of `plan`, plus the number of walks that
/// needed closing.
pub fn expand_plan(instance: &Instance, view: &SuperDepotView, plan: &SegmentPlan) -> (Solution, usize) {
    let mut tours = Vec::new();
    let mut repairs = 0;
    for seg in &plan.segments {
        for walk in expand_segment(view, seg) {
            if walk.start != walk.end {
                repairs += 1;
            }
            tours.push(fix_open_walk(instance, &walk));
        }
    }
    (Solution::new(tours), repairs)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycleOutcome {
    pub solution: Solution,
    pub plan: SegmentPlan,
    pub repairs: usize,
}

/// Cycle partition for the multidepot problem: ITP (UITP when unsplittable)
/// in H, then expansion and walk repair in G.
pub fn cycle_partition_mcvrp(instance: &Instance, view: &SuperDepotView, cycle: &HamCycle) -> Result<CycleOutcome> {
    let k = instance.capacity();
    let plan = match instance.variant() {
        Variant::Unsplittable => uitp_split(view, cycle, k)?,
        variant => itp_split(view, cycle, k, variant)?,
    };
    let (solution, repairs) = expand_plan(instance, view, &plan);
    Ok(CycleOutcome { solution, plan, repairs })
}
