//! Compiles and runs the C program in `c_smoke.c` against the generated
//! header and the static library.

use std::path::PathBuf;
use std::process::Command;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let workspace = manifest.parent().unwrap().parent().unwrap();
    // make sure the staticlib artifact exists (cheap when fresh)
    let status = Command::new(env!("CARGO"))
        .args(["build", "-p", "dcrystal-capi"])
        .current_dir(workspace)
        .status()
        .expect("cargo runs");
    assert!(status.success(), "building the static library failed");

    let lib_dir = workspace.join("target").join("debug");
    assert!(
        lib_dir.join("libdcrystal_capi.a").exists(),
        "staticlib missing"
    );
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let exe = tmp.join("c_smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    let out = Command::new(&cc)
        .arg(manifest.join("tests").join("c_smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-L")
        .arg(&lib_dir)
        .args(["-ldcrystal_capi", "-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .expect("C compiler runs");
    assert!(
        out.status.success(),
        "compilation failed:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let run = Command::new(&exe).output().expect("smoke binary runs");
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "c-abi ok");
}
