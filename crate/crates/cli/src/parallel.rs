//! Sharded counting across OS threads. The merge is a commutative sum into
//! ordered maps, so the result is byte-identical for every thread count.

use num_bigint::BigUint;

use paucity_core::budget::Budget;
use paucity_core::counting::{
    count_fast, count_shard, finalize, multiset_count, CountError, CountReport, ShardHistogram,
    SystemSpec,
};

pub fn threaded_count(
    spec: &SystemSpec,
    x_max: u64,
    threads: usize,
    budget: &Budget,
) -> Result<CountReport, CountError> {
    if threads <= 1 {
        return count_fast(spec, x_max, budget);
    }
    if x_max == 0 {
        return Err(CountError::ZeroXMax);
    }
    let attempted = multiset_count(spec.vars(), x_max);
    if attempted > BigUint::from(budget.max_map_entries) {
        return Err(CountError::MapBudgetExceeded {
            attempted,
            allowed: budget.max_map_entries,
        });
    }
    let parts: Result<Vec<ShardHistogram>, CountError> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|shard| scope.spawn(move || count_shard(spec, x_max, shard, threads)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("counting worker panicked"))
            .collect()
    });
    Ok(finalize(spec, x_max, parts?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_count_does_not_change_results() {
        let budget = Budget::default();
        let spec = SystemSpec::incomplete(3, 0).unwrap();
        let base = count_fast(&spec, 7, &budget).unwrap();
        for threads in 1..=4 {
            let r = threaded_count(&spec, 7, threads, &budget).unwrap();
            assert_eq!(r.solutions, base.solutions, "threads={threads}");
            assert_eq!(r.diagonal, base.diagonal, "threads={threads}");
        }
    }

    #[test]
    fn budget_still_enforced() {
        let tiny = Budget { max_map_entries: 5, ..Budget::default() };
        let spec = SystemSpec::incomplete(3, 0).unwrap();
        assert!(matches!(
            threaded_count(&spec, 7, 3, &tiny),
            Err(CountError::MapBudgetExceeded { .. })
        ));
    }
}
