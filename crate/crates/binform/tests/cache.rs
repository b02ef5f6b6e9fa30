use binform::{Cache, CacheKey, Engine};

#[test]
fn warm_engine_reads_instead_of_computing() {
    let dir = tempfile::tempdir().unwrap();
    let cold = Engine::new(Some(Cache::open(dir.path()).unwrap()));
    let h = cold.hermite().clone();
    let res = cold.resultant().clone();
    let lam = cold.lambda_fq().clone();
    assert_eq!((cold.computed(), cold.cache_hits()), (3, 0));

    let warm = Engine::new(Some(Cache::open(dir.path()).unwrap()));
    assert_eq!(warm.hermite(), &h);
    assert_eq!(warm.resultant(), &res);
    assert_eq!(warm.lambda_fq(), &lam);
    assert_eq!((warm.computed(), warm.cache_hits()), (0, 3));

    let bare = Engine::new(None);
    assert_eq!(bare.hermite(), &h);
    assert_eq!(bare.lambda_fq(), &lam);
}

#[test]
fn heavy_values_round_trip_through_disk() {
    let dir = tempfile::tempdir().unwrap();
    let cold = Engine::new(Some(Cache::open(dir.path()).unwrap()));
    let eh = cold.hermite_evectant().clone();
    let g = cold.gamma_tau_fq().clone();
    let k = cold.k_tau().unwrap().clone();
    let warm = Engine::new(Some(Cache::open(dir.path()).unwrap()));
    assert_eq!(warm.hermite_evectant(), &eh);
    assert_eq!(warm.gamma_tau_fq(), &g);
    assert_eq!(warm.k_tau().unwrap(), &k);
    assert_eq!(warm.computed(), 0);
}

#[test]
fn corrupted_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let h = Engine::new(Some(cache.clone())).hermite().clone();

    let path = cache.path_for(&CacheKey::new("hermite", "quintic"));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replacen("a0", "a1", 1)).unwrap();

    let again = Engine::new(Some(cache.clone()));
    assert_eq!(again.hermite(), &h);
    assert_eq!((again.computed(), again.cache_hits()), (1, 0));
    // the rewrite restored a valid entry
    assert!(cache.load(&CacheKey::new("hermite", "quintic")).is_some());
}

#[test]
fn concurrent_readers_share_one_computation() {
    let engine = Engine::new(None);
    std::thread::scope(|s| {
        for _ in 0..4 {
            s.spawn(|| assert_eq!(engine.hermite().degree(), 18));
        }
    });
    assert_eq!(engine.computed(), 1);
}
