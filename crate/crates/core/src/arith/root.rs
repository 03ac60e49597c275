use serde::{Deserialize, Serialize};

use super::CycNum;

/// The root of unity zeta_field^step, used as the primitive (field/step)-th root at a sub-level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub field: u32,
    pub step: u32,
}

impl Root {
    pub fn primitive(e: u32) -> Root {
        Root { field: e, step: 1 }
    }

    /// Order of the root.
    pub fn order(&self) -> u32 {
        self.field / self.step
    }

    /// The root raised to k (any sign).
    pub fn pow(&self, k: i64) -> CycNum {
        CycNum::zeta_pow(self.field, self.step as i64 * k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sub_level_root() {
        let r = Root { field: 4, step: 2 };
        assert_eq!(r.order(), 2);
        assert_eq!(r.pow(1), CycNum::from_int(4, -1));
        assert_eq!(r.pow(-3), CycNum::from_int(4, -1));
    }
}
