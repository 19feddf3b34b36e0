//! Partitioning a cycle or a spanning tree of H into capacity-feasible tours.

mod cycle;
mod itp;
mod tree;

pub use cycle::{cycle_partition_mcvrp, expand_plan, expand_segment, fix_open_walk, CycleOutcome, Node, OpenWalk};
pub use itp::{all_phases, customers_after_depot, delta_uitp, itp_split, segment_cost, uitp_split, SegmentPlan};
pub use tree::{greedy_pack, refined_tree_partition, Component, ForestPartition, Packing, TreeOutcome};
