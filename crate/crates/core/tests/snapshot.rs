use wellrevival::cli::run;
use wellrevival::revival::{well_revival_report, RevivalScan};
use wellrevival::spectrum::{solve_spectrum, WellConfig, DEFAULT_ROOT_TOL};
use wellrevival::wavepacket::{project, snapshot, GaussianSpec};

fn grid() -> Vec<f64> {
    let n = 2001;
    let mut xs = vec![0.0; n];
    for i in 0..n / 2 {
        xs[i] = -1.0 + i as f64 * 1e-3;
        xs[n - 1 - i] = -xs[i];
    }
    xs
}

fn maxima(d: &[f64]) -> Vec<usize> {
    (1..d.len() - 1).filter(|&i| d[i] > d[i - 1] && d[i] >= d[i + 1]).collect()
}

fn densities(x0: f64, taus: &[f64]) -> Vec<Vec<f64>> {
    let s = solve_spectrum(WellConfig::new(12.0).unwrap(), DEFAULT_ROOT_TOL).unwrap();
    let d = project(&GaussianSpec::new(x0, 0.1).unwrap(), &s).unwrap();
    taus.iter().map(|&t| snapshot(&d, &s, t, &grid()).unwrap()).collect()
}

#[test]
fn starts_at_the_packet_centre() {
    let xs = grid();
    let d = &densities(0.2, &[0.0])[0];
    let i = (0..d.len()).max_by(|&a, &b| d[a].total_cmp(&d[b])).unwrap();
    assert!((xs[i] - 0.2).abs() < 2e-3);
}

#[test]
fn centred_density_is_even() {
    for d in densities(0.0, &[0.0, 0.37, 3.1, 6.04]) {
        let n = d.len();
        for i in 0..n {
            assert!((d[i] - d[n - 1 - i]).abs() < 1e-10);
        }
    }
    // same through the command line
    let mut out = Vec::new();
    let code = run(
        ["wellrevival", "snapshot", "--x0", "0", "--tau", "0.25,1.5", "--grid", "65", "--format", "json"],
        &mut out,
        &mut Vec::new(),
    );
    assert_eq!(code, 0);
    let frames: serde_json::Value = serde_json::from_slice(&out).unwrap();
    for f in frames.as_array().unwrap() {
        let d: Vec<f64> = f["density"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
        for i in 0..d.len() {
            assert!((d[i] - d[d.len() - 1 - i]).abs() < 1e-10);
        }
    }
}

#[test]
fn splits_before_the_revival_and_reassembles_at_it() {
    let packet = GaussianSpec::new(0.2, 0.1).unwrap();
    let t = well_revival_report(&packet, 12.0, &RevivalScan::default())
        .unwrap()
        .detected_revival
        .unwrap();
    let xs = grid();
    let d = densities(0.2, &[0.0, 0.25 * t, 0.5 * t, t, 0.5]);

    // half-way: more than one local maximum on a dense grid
    assert!(maxima(&d[2]).len() >= 2);

    // quarter-way: two comparable lumps on opposite sides of the centre
    let peak = d[1].iter().cloned().fold(0.0, f64::max);
    let big: Vec<f64> = maxima(&d[1]).into_iter().filter(|&i| d[1][i] > 0.5 * peak).map(|i| xs[i]).collect();
    assert_eq!(big.len(), 2, "{big:?}");
    assert!(big[0] < 0.0 && big[1] > 0.0);

    let l2 = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
    assert!(l2(&d[3], &d[0]) < l2(&d[4], &d[0]));
}

#[test]
fn rejects_coarse_grids() {
    let code = run(["wellrevival", "snapshot", "--tau", "0", "--grid", "31"], &mut Vec::new(), &mut Vec::new());
    assert_eq!(code, 2);
}
