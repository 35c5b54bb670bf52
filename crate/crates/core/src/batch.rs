//! Seeded partition of a dataset into fixed-size batches.

use crate::rng::{derive_seed, rng_from_seed};
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BatchError {
    #[error("batch size must be positive")]
    ZeroBatch,
    #[error("{items} items cannot fill one batch of {batch}")]
    TooFew { items: usize, batch: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchPlan {
    /// Item indices; every batch has exactly the batch size.
    pub batches: Vec<Vec<usize>>,
    /// Items left over after the last full batch.
    pub dropped: Vec<usize>,
}

/// Shuffles `0..items` with a seed derived from `(seed, epoch)` and cuts it
/// into full batches. The short remainder is dropped.
pub fn plan_epoch(items: usize, batch: usize, seed: u64, epoch: usize) -> Result<BatchPlan, BatchError> {
    if batch == 0 {
        return Err(BatchError::ZeroBatch);
    }
    if items < batch {
        return Err(BatchError::TooFew { items, batch });
    }
    let mut order: Vec<usize> = (0..items).collect();
    order.shuffle(&mut rng_from_seed(derive_seed(seed, &format!("epoch{epoch}"))));
    let full = items / batch * batch;
    let dropped = order.split_off(full);
    Ok(BatchPlan {
        batches: order.chunks(batch).map(<[usize]>::to_vec).collect(),
        dropped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventy_by_thirty_two() {
        let p = plan_epoch(70, 32, 9, 0).unwrap();
        assert_eq!(p.batches.len(), 2);
        assert_eq!(p.dropped.len(), 6);
        let mut all: Vec<usize> = p.batches.concat();
        all.extend(&p.dropped);
        all.sort_unstable();
        assert_eq!(all, (0..70).collect::<Vec<_>>());
        assert_eq!(p, plan_epoch(70, 32, 9, 0).unwrap());
        assert_ne!(p, plan_epoch(70, 32, 9, 1).unwrap());
        assert_eq!(plan_epoch(5, 8, 0, 0), Err(BatchError::TooFew { items: 5, batch: 8 }));
    }
}
