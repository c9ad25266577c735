use novikov::check::{run_checks, CheckConfig, Identity};
use std::process::Command;

#[test]
fn report_does_not_depend_on_thread_count() {
    let config = CheckConfig { trials: 60, seed: 11, ..CheckConfig::default() };
    let ids = [Identity::Leibniz, Identity::LeftSym, Identity::Iso];
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let a = single.install(|| run_checks(&ids, &config)).render();
    let wide = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let b = wide.install(|| run_checks(&ids, &config)).render();
    assert_eq!(a, b);
}

#[test]
fn binary_output_is_byte_identical_across_runs() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_novikov"))
            .args(["check", "--identity", "jacobi", "--trials", "30", "--seed", "5"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
