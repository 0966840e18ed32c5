use delannoy_jacobi::identities::{
    registry, run_all, run_identity, Family, Fault, IdentityReport, Status, SuiteConfig,
};

fn capped(max_n: usize, parallel: bool) -> SuiteConfig {
    SuiteConfig {
        max_n: Some(max_n),
        parallel,
        ..SuiteConfig::default()
    }
}

fn without_timing(mut reports: Vec<IdentityReport>) -> Vec<IdentityReport> {
    for r in &mut reports {
        r.millis = 0;
    }
    reports
}

#[test]
fn default_suite_passes() {
    let reports = run_all(&SuiteConfig::default());
    assert_eq!(reports.len(), registry().len());
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "{}: {:?}", r.id, r.counterexample);
        assert!(r.cases_run > 0, "{}", r.id);
    }
}

#[test]
fn capped_grids_pass_with_fewer_cases() {
    let small = run_all(&capped(2, true));
    let larger = run_all(&capped(4, true));
    for (s, l) in small.iter().zip(&larger) {
        assert!(s.passed(), "{}: {:?}", s.id, s.counterexample);
        assert!(s.cases_run <= l.cases_run, "{}", s.id);
    }
    let total = |rs: &[IdentityReport]| rs.iter().map(|r| r.cases_run).sum::<usize>();
    assert!(total(&small) < total(&larger));
}

#[test]
fn parallel_and_sequential_runs_agree() {
    let a = without_timing(run_all(&capped(3, true)));
    let b = without_timing(run_all(&capped(3, false)));
    let c = without_timing(run_all(&capped(3, true)));
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn injected_fault_is_reported_with_counterexample() {
    let config = SuiteConfig {
        fault: Some(Fault {
            family: Family::Narayana,
            n: 2,
            coefficient: 1,
        }),
        ..capped(4, true)
    };
    let reports = run_all(&config);
    let failed: Vec<&IdentityReport> = reports.iter().filter(|r| !r.passed()).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].id, "narayana");
    let ce = failed[0].counterexample.as_ref().unwrap();
    assert_eq!(ce.case, "integral");
    assert_eq!(ce.params, vec![("n".to_string(), "2".to_string())]);
}

#[test]
fn report_json_schema() {
    let report = run_identity("bneg-table1", &SuiteConfig::default()).unwrap();
    let value = serde_json::to_value(&report).unwrap();
    let obj = value.as_object().unwrap();
    for key in ["id", "status", "cases_run", "counterexample", "millis"] {
        assert!(obj.contains_key(key), "missing {key}");
    }
    assert_eq!(obj["status"], "pass");
    assert_eq!(obj["cases_run"], 7);
    assert!(obj["counterexample"].is_null());

    let failing = SuiteConfig {
        fault: Some(Fault {
            family: Family::ShiftedJacobi,
            n: 1,
            coefficient: 0,
        }),
        ..SuiteConfig::default()
    };
    let report = run_identity("bneg-table1", &failing).unwrap();
    let value = serde_json::to_value(&report).unwrap();
    assert_eq!(value["status"], "fail");
    assert_eq!(value["cases_run"], 2);
    assert_eq!(value["counterexample"]["params"]["n"], "1");
    assert_eq!(value["counterexample"]["lhs"], "-4x + 6");
    assert_eq!(value["counterexample"]["rhs"], "-4x + 5");
}
