//! Log-sine-cosine integrals against independent references: an external
//! CAS quadrature, dilogarithm closed forms, and the values at π.

mod common;

use apery_verify::logsine::{lsc, lsc_pi, lsc_reflect, lshch};
use apery_verify::numkernel::{constant, pi, ConstantName, PrecComplex};
use apery_verify::polylog::li;
use common::*;
use rug::ops::Pow;
use rug::Float;

/// (j, k, θ, Lsc_{j,k}(θ))
const LSC: &[(u32, u32, &str, &str)] = &[
    (4, 1, "0.3", "5.798100631780166829830950296714683532415359469043147867"),
    (4, 1, "1.0", "6.009496688857410957969715512483661945467770225556117765"),
    (4, 1, "2.0", "5.96514799301278085553612553201233845710718782153879841"),
    (4, 1, "3.0", "5.711543349059273783659613176929764263018759400168579136"),
    (4, 1, "4.5", "5.339400519612541409792247069048711267303549392669232552"),
    (3, 2, "0.3", "-1.216036204406742893026577315074650244938635278335292291"),
    (3, 2, "1.0", "-1.383170470697986255373977273862217096348398413508469441"),
    (3, 2, "2.0", "-1.410212788660957835829713831243037902491775760146436403"),
    (3, 2, "3.0", "-1.144748190477325586420086759770476790840576531109766315"),
    (3, 2, "4.5", "-0.4856587270157769391839869630230650083031966156851494834"),
    (2, 3, "0.3", "0.315456579925365138698376115919848441425697530257562306"),
    (2, 3, "1.0", "0.466861334156653292127813310107467941523637442228267387"),
    (2, 3, "2.0", "0.4391950302715231131113095996778709347241104034645762588"),
    (2, 3, "3.0", "0.01042863329778240240297645038988435581043577950929726253"),
    (2, 3, "4.5", "-2.330052634440959800079796686426188872146800480074014156"),
    (1, 4, "0.3", "-0.09829801682959413489493105016963461347466258252377527534"),
    (1, 4, "1.0", "-0.2779952827270216404631608552132452524398934009461123991"),
    (1, 4, "2.0", "-0.3449264982554703308591729802677536190295173937710979537"),
    (1, 4, "3.0", "0.472811426757836991719201557567764381206378653478278865"),
    (1, 4, "4.5", "11.67303695248112113145590355327821554410924889375416649"),
    (2, 2, "0.3", "0.4568277305641720621869397570697442195646529788945085503"),
    (2, 2, "1.0", "0.6876373843133811671712758651698495107850624412984321404"),
    (2, 2, "2.0", "0.6057176243729556138527703645698548395166588121415343235"),
    (2, 2, "3.0", "1.002174082779546177612849874266828875449267042158044459"),
    (2, 2, "4.5", "1.962046895093210732446721053885001241521665640459724356"),
    (3, 1, "0.3", "-1.758403135226280118661610191133518443762825763875563086"),
    (3, 1, "1.0", "-2.009638685981972629989901675829032710811681325329784166"),
    (3, 1, "2.0", "-2.117724344926816168636209296645280875766134544747012048"),
    (3, 1, "3.0", "-2.515991647807328440868326580759475241303653501791327716"),
    (3, 1, "4.5", "-3.10065238207013798328006421786615470994600468669109466"),
    (5, 1, "0.3", "-23.81794998238192237986710415818737321599727688106728541"),
    (5, 1, "1.0", "-24.01253309662844824282005217357225305400451800345860635"),
    (5, 1, "2.0", "-24.03165955612885528443045822026758150682326094697961776"),
    (5, 1, "3.0", "-24.19403095179156776084289547040002406176547861753300993"),
    (5, 1, "4.5", "-24.4333990692400762765836192218447585014253064399613523"),
    (2, 4, "0.3", "0.2178387771934268617925943413671885982616315532675331854"),
    (2, 4, "1.0", "0.3172986385276367651100964130471893456517983742817647347"),
    (2, 4, "2.0", "0.3069065697639179808677482757759549252064986158923300228"),
    (2, 4, "3.0", "0.8656587606590539123541806169532006611039095928608869921"),
    (2, 4, "4.5", "8.618196463707043086207885542716256193494134692496520628"),
];

/// (j, k, x, Lshch_{j,k}(x))
const LSHCH: &[(u32, u32, &str, &str)] = &[
    (3, 1, "0.1", "-1.19063361663759859289320692094679567065036412608991461"),
    (3, 1, "0.9624236501192068949955178268487368462703686687713210393220363376", "-1.991089882371392968230758181371506714228628916274806756"),
    (3, 1, "2.5", "-2.79310913906488998977957810108223545723019306406361316"),
    (3, 1, "7", "-29.79268643593459368892435198463690303735540633763565545"),
    (1, 3, "0.1", "-0.04810308045458440610028410855947398752197844614703439114"),
    (1, 3, "0.9624236501192068949955178268487368462703686687713210393220363376", "-0.515195736390578450920292416840706608543384187362398904"),
    (1, 3, "2.5", "-2.218535072889741126789500965173941120461282682049981931"),
    (1, 3, "7", "-29.77809632375554879094131089484045662845742077141635445"),
    (2, 2, "0.1", "0.2290179214789463369520290909780047964171438287030065461"),
    (2, 2, "0.9624236501192068949955178268487368462703686687713210393220363376", "0.6968814588299875388807653634800273499800201206961823647"),
    (2, 2, "2.5", "-0.408975658090651659925815557680015606446197936370495002"),
    (2, 2, "7", "-27.68179263084473082415269326836004334599654797726910073"),
    (4, 1, "0.1", "4.792633551132696638651496923728227281216139045356930537"),
    (4, 1, "0.9624236501192068949955178268487368462703686687713210393220363376", "5.990954427333662221085106748708180940427344354228792634"),
    (4, 1, "2.5", "5.272967404356274872588893299358811680688594723536919004"),
    (4, 1, "7", "-67.77002655080677587990560737395916949987978559521450521"),
    (2, 3, "0.1", "0.1588193077525790314442810365862616811622970722525025817"),
    (2, 3, "0.9624236501192068949955178268487368462703686687713210393220363376", "0.4924183840028917801582938316208815912883717615983312785"),
    (2, 3, "2.5", "-0.7629314327538940355871606320996007078973556304441995834"),
    (2, 3, "7", "-74.81350667990864979565621996300495775461276823690190697"),
];

#[test]
fn lsc_reference_table() {
    let p = 192;
    for &(j, k, th, v) in LSC {
        let r = lsc(j, k, &real(th, p), p).unwrap();
        assert!(within(&r.value, &real(v, p), 50), "Lsc_{{{j},{k}}}({th}) = {}, want {v}", r.value);
    }
}

#[test]
fn lshch_reference_table() {
    let p = 192;
    for &(j, k, x, v) in LSHCH {
        let r = lshch(j, k, &real(x, p), p).unwrap();
        assert!(within(&r.value, &real(v, p), 50), "Lshch_{{{j},{k}}}({x}) = {}, want {v}", r.value);
    }
}

#[test]
fn clausen_and_dilogarithm_forms() {
    let p = 256;
    let pi = pi(p);
    for th in ["0.2", "1.3", "2.9", "5.5"] {
        let t = real(th, p);
        // Ls_2(θ) = Cl_2(θ) = Im Li_2(e^{iθ})
        let cl = li(2, &PrecComplex::exp_i(&t), p).unwrap().im;
        assert!(within(&lsc(2, 1, &t, p).unwrap().value, &cl, 70), "Ls_2({th})");
    }
    for th in ["0.2", "1.3", "2.9"] {
        let t = real(th, p);
        // Lsc_{1,2}(θ) = -Cl_2(π - θ)
        let cl = li(2, &PrecComplex::exp_i(&Float::with_val(p, &pi - &t)), p).unwrap().im;
        assert!(within(&lsc(1, 2, &t, p).unwrap().value, &-cl, 70), "Lsc_12({th})");
    }
    let z2 = constant(ConstantName::Zeta2, p).unwrap();
    for x in ["0.05", "0.7", "3.5"] {
        let x = real(x, p);
        let q = PrecComplex::from_real(&Float::with_val(p, -&x).exp());
        let quarter_sq = Float::with_val(p, x.square_ref()) / 4u32;
        // Lsh_2(x) = ζ(2) - x²/4 - Li_2(e^{-x})
        let want = Float::with_val(p, &z2 - &quarter_sq) - li(2, &q, p).unwrap().re;
        assert!(within(&lshch(2, 1, &x, p).unwrap().value, &want, 70));
        // Lshch_{1,2}(x) = Li_2(-1) - x²/4 - Li_2(-e^{-x})
        let li_m1 = -Float::with_val(p, &z2 / 2u32);
        let want = Float::with_val(p, &li_m1 - &quarter_sq) - li(2, &(-&q), p).unwrap().re;
        assert!(within(&lshch(1, 2, &x, p).unwrap().value, &want, 70));
    }
}

#[test]
fn values_at_pi() {
    let p = 192;
    let pi_p = pi(p);
    let z3 = constant(ConstantName::Zeta3, p).unwrap();
    let pz3 = Float::with_val(p, &pi_p * &z3);
    // Ls_4(π) = 3/2 π ζ(3),  Lsc_{3,2}(π) = -1/4 π ζ(3)
    let ls4 = Float::with_val(p, &pz3 * 3u32) / 2u32;
    let lsc32 = Float::with_val(p, &pz3 / -4i32);
    assert!(within(&lsc_pi(4, 1, p).unwrap(), &ls4, 55));
    assert!(within(&lsc_pi(3, 2, p).unwrap(), &lsc32, 55));
    assert!(within(&lsc(4, 1, &pi_p, p).unwrap().value, &ls4, 50));
    assert!(within(&lsc(3, 2, &pi_p, p).unwrap().value, &lsc32, 50));
    // Ls_3(π) = -π³/12, Ls_2(π) = 0
    let pi3 = Float::with_val(p, pi_p.clone().pow(3u32));
    assert!(within(&lsc_pi(3, 1, p).unwrap(), &-Float::with_val(p, &pi3 / 12u32), 55));
    assert!(lsc_pi(2, 1, p).unwrap().abs() < 1e-50);
    // Lsc_{1,1}(π) = -π
    assert_eq!(lsc_pi(1, 1, p).unwrap(), -pi_p.clone());
    // reflection at θ = π returns the π-value
    assert!(within(&lsc_reflect(2, 3, &pi_p, p).unwrap(), &lsc_pi(2, 3, p).unwrap(), 55));
}
