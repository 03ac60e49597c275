//! e-partitions, theta-orbits, parameter sets of characters and classes, symbols and the total order.

mod params;
mod partition;
mod symbol;

pub use params::{
    alpha_divide, alpha_truncate, canonical_rep, delta, divisible_by, enumerate_char_params,
    enumerate_class_params, f_invariant, orbit_data, theta, CharParam, ClassParam, GroupParams,
};
pub use partition::{enumerate_epartitions, partitions, z_partition, EPartition, Partition};
pub use symbol::{
    a_value, make_symbol, order_cmp, similarity_order, similarity_order_epartitions, similarity_partition,
    symbol_data, SimilarityPartition, Symbol,
};
