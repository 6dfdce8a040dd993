/// Deterministic parallel map over indices 0..count: worker w handles the
/// stripe w, w+threads, w+2·threads, … and results are reassembled in input
/// order, so output is identical for any thread count.
pub fn striped_map<R, F>(count: u64, threads: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync,
{
    let threads = threads.max(1);
    if threads == 1 || count <= 1 {
        return (0..count).map(f).collect();
    }
    let stripes: Vec<Vec<R>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads as u64)
            .map(|w| {
                let f = &f;
                s.spawn(move || {
                    (w..count)
                        .step_by(threads)
                        .map(f)
                        .collect::<Vec<R>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut out = Vec::with_capacity(count as usize);
    let mut iters: Vec<_> = stripes.into_iter().map(|v| v.into_iter()).collect();
    'rounds: loop {
        for it in iters.iter_mut() {
            match it.next() {
                Some(r) => out.push(r),
                // stripe lengths differ by at most one, in worker order, so
                // the first exhausted stripe ends the whole interleave
                None => break 'rounds,
            }
        }
    }
    out
}
