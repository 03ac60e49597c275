//! Objects attached to G(e,1,n): characters, centralizer series, Hall-Littlewood functions.

mod chartable;
mod hall_littlewood;
mod zseries;

pub use chartable::{char_table, char_table_root, CharTable};
pub use hall_littlewood::{compute_hall_littlewood, hall_littlewood, hall_littlewood_root, kostka, HLBasis, CACHE_ENV};
pub use zseries::{z_alpha, z_series, z_series_root, ZSeries};
