use carnot_core::cli::run;

fn carnot(args: &[&str]) -> (i32, String, String) {
    let out = run(std::iter::once("carnot").chain(args.iter().copied()));
    (out.code, out.stdout, out.stderr)
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = carnot(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    stdout
}

#[test]
fn catalog_listing() {
    let out = ok(&["catalog"]);
    assert_eq!(out.lines().count(), 16);
    assert!(out.starts_with("abelian_1\n"));
    assert!(out.ends_with("paper_example_1\npaper_example_3\n"));
}

#[test]
fn info_heisenberg() {
    assert_eq!(
        ok(&["info", "heisenberg_1"]),
        "algebra: heisenberg_1\ndimension: 3\nstep: 2\nlayers: 2 1\nhausdorff_dimension: 4\nnonzero_brackets: 1\nV1: x1 y1\nV2: z\n"
    );
}

#[test]
fn validate_passes_on_example() {
    let out = ok(&["validate", "paper_example_3"]);
    assert!(out.ends_with("overall: pass\n"), "{out}");
}

#[test]
fn rank_and_wedge() {
    assert_eq!(ok(&["rank", "paper_example_1", "--x", "X - Y"]), "x: X - Y\nrank: 1\n");
    assert_eq!(ok(&["rank", "paper_example_3", "--x", "e1", "--wedge", "4"]), "x: e1\nrank: 5\nwedge 5: nonzero\n");
    assert_eq!(ok(&["rank", "heisenberg_1", "--x", "1,0,0"]), "x: x1\nrank: 1\n");
}

#[test]
fn bch_distance_probe() {
    assert_eq!(ok(&["bch", "model_filiform_4", "--x", "e1", "--y", "e2"]), "e1 + e2 + 1/2 e3 + 1/12 e4\n");
    assert_eq!(ok(&["distance", "heisenberg_1", "--p", "0,0,0", "--q", "0,0,4"]), "2\n");
    assert_eq!(
        ok(&["probe-divergence", "heisenberg_1", "--w", "x1", "--v", "y1"]),
        "t ratio\n1 2\n4 0.75\n16 0.3125\n64 0.140625\n"
    );
}

#[test]
fn analyze_examples() {
    let out = ok(&["analyze", "paper_example_1"]);
    assert!(out.contains("r1: 1\n"));
    assert!(out.contains("w1_dim: 4\n"));
    assert!(out.contains("generated_layer_dims: 4 1\n"));
    let out = ok(&["analyze", "paper_example_3"]);
    assert!(out.contains("r1: 5\n"));
    assert!(out.contains("w1_basis:\n  - e1\n  - e2\n"));
    assert!(out.contains("generated_layer_dims: 2 1 1 1\n"));
}

#[test]
fn rigidity_verdicts() {
    let out = ok(&["rigidity", "paper_example_1"]);
    assert!(out.starts_with("certificate v1\nverdict: rigid\n"));
    assert!(out.contains("\n  rule: T1.2\n"));
    let out = ok(&["rigidity", "paper_example_3"]);
    assert!(out.contains("\n  rule: T1.3\n"));
    assert!(out.contains("rule: REGISTRY"));
    assert!(out.contains("registry_family: model_filiform_4"));
    assert!(ok(&["rigidity", "heisenberg_2"]).contains("verdict: non_rigid_known\n"));
    let out = ok(&["rigidity", "free_2step_3", "--w1", "X1"]);
    assert!(out.contains("verdict: rigid\n") && out.contains("user-asserted"));
}

#[test]
fn products_emit_algebra_files() {
    assert_eq!(
        ok(&["product", "level-one", "heisenberg_1", "heisenberg_1"]),
        "carnot v1\nname level_one(heisenberg_1,heisenberg_1)\nlayers 3 2\nbasis y1 y1' X z z'\nbracket 1 3 = -1 4\nbracket 2 3 = -1 5\n"
    );
    let out = ok(&["product", "direct", "heisenberg_1", "abelian_1", "--name", "h_plus_r"]);
    assert!(out.starts_with("carnot v1\nname h_plus_r\nlayers 3 1\n"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(carnot(&["rigidity", "free_2step_3", "--require-rigid"]).0, 1);
    assert_eq!(carnot(&["rank", "heisenberg_1", "--x", "1,2"]).0, 2);
    assert_eq!(carnot(&["bch", "heisenberg_1", "--x", "1", "--y", "2"]).2, "error: expected 3 coordinates, got 1\n");
    assert_eq!(carnot(&["rank", "no_such_algebra", "--x", "1"]).0, 2);
    assert_eq!(carnot(&["frobnicate"]).0, 2);
    let (code, _, err) = carnot(&["analyze", "paper_example_3", "--max-evaluations", "10"]);
    assert_eq!(code, 3);
    assert!(err.starts_with("error: search budget exceeded"));
}

#[test]
fn algebra_files_and_parse_errors() {
    let dir = std::env::temp_dir().join(format!("carnot-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("h.carnot");
    std::fs::write(&good, "carnot v1\n# first Heisenberg\nname h\nlayers 2 1\nbracket 1 2 = 1 3\n").unwrap();
    let out = ok(&["info", good.to_str().unwrap()]);
    assert!(out.starts_with("algebra: h\ndimension: 3\n"));
    let bad = dir.join("dup.carnot");
    std::fs::write(&bad, "carnot v1\nlayers 2 1\nbracket 1 2 = 1 3\nbracket 1 2 = 1 3\n").unwrap();
    let (code, _, err) = carnot(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.ends_with("line 4: duplicate bracket 1 2\n"), "{err}");
    let broken = dir.join("jacobi.carnot");
    std::fs::write(&broken, "carnot v1\nlayers 2 1\n").unwrap();
    let (code, out, _) = carnot(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}
