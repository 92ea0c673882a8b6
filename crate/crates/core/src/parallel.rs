/// Order-preserving map over `items` on up to `workers` scoped threads.
///
/// Items are split into contiguous shards; results are concatenated in input
/// order, so output is identical for every worker count.
pub fn par_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let shard = items.len().div_ceil(workers);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(shard)
            .map(|chunk| {
                let f = &f;
                scope.spawn(move || chunk.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u32> = (0..103).collect();
        let serial = par_map(&items, 1, |x| x * x);
        for w in [2, 4, 7, 200] {
            assert_eq!(par_map(&items, w, |x| x * x), serial);
        }
        assert!(par_map(&Vec::<u32>::new(), 4, |x| *x).is_empty());
    }
}
