//! Polylogarithm values against references from an independent
//! arbitrary-precision CAS and classical closed forms.

mod common;

use apery_verify::numkernel::{constant, pi, ConstantName, PrecComplex};
use apery_verify::polylog::{li, li_upto};
use common::*;
use rug::ops::Pow;
use rug::Float;

/// (re z, im z, j, re Li_j(z), im Li_j(z)), 55 significant digits.
const REFERENCE: &[(&str, &str, u32, &str, &str)] = &[
    ("0.5", "0", 1, "0.6931471805599453094172321214581765680755001343602552541", "0.0"),
    ("0.5", "0", 2, "0.5822405264650125059026563201596801087441984748061264254", "0.0"),
    ("0.5", "0", 3, "0.5372131936080402009406232255949658266704024993403781707", "0.0"),
    ("0.5", "0", 4, "0.5174790616738993863307581618988629456223774751413792582", "0.0"),
    ("-1", "0", 1, "-0.6931471805599453094172321214581765680755001343602552541", "0.0"),
    ("-1", "0", 2, "-0.8224670334241132182362075833230125946094749506033992189", "0.0"),
    ("-1", "0", 3, "-0.9015426773696957140498036211335874930737397192553741613", "0.0"),
    ("-1", "0", 4, "-0.9470328294972459175765032344735219149279070829288860442", "0.0"),
    ("0.9", "0.3", 1, "1.151292546497022842008995727342182103800550744314386488", "1.249045772398254425829917077281090123077829404129896719"),
    ("0.9", "0.3", 2, "1.104986351524215680135213933883339684798605303010900593", "0.6170530280848619820406225627938411360930983390529921149"),
    ("0.9", "0.3", 3, "1.00587489804213899168171080207027705898702642854279238", "0.4164134953128234110182264486354762757199339889513958395"),
    ("0.9", "0.3", 4, "0.9511245080540629307794550381179925172342888329077367621", "0.3474627845574920212470718758122150391607243853157962754"),
    ("0.3", "0.95", 1, "-0.1655503464096510175204898922798501064487717419118661981", "0.9357695914045828492283096345668415799380832661993902635"),
    ("0.3", "0.95", 2, "0.05863709947322312932097501596479787811222362270259026674", "0.9924645889981699237643705343251974409262083981157414305"),
    ("0.3", "0.95", 3, "0.1808954949320168682897739694523665108818480950230876747", "0.9889710144039288179286574455193678060330052593802936668"),
    ("0.3", "0.95", 4, "0.2421996809876579634849712850320995432369041526991583983", "0.9753765941139430696520795603240136009083062799102218876"),
    ("-0.8", "-0.6", 1, "-0.6404669227310321588034816310385201689224399478686182178", "-0.3217505543966421934014046143586613190207552955576561914"),
    ("-0.8", "-0.6", 2, "-0.7189436141695666111455283956406240642226743502454243831", "-0.4348208088619013637964123792221118543049365413949420285"),
    ("-0.8", "-0.6", 3, "-0.7598274414809018605537444409091470202767421573721314158", "-0.5070526362622158835066300245825275315217785440161978029"),
    ("-0.8", "-0.6", 4, "-0.7803159965602147875781198356447058959079216514952731449", "-0.549590949629311323604903364730246646867131400476874524"),
    ("2", "0", 1, "0.0", "-3.141592653589793238462643383279502884197169399375105821"),
    ("2", "0", 2, "2.467401100272339654708622749969037783828424851810197657", "-2.177586090303602130500688898237613947338583700369286294"),
    ("2", "0", 3, "2.7620719062289241359366406798110427597443077678449149", "-0.7546938294602481388581278803810820098780549299161101067"),
    ("2", "0", 4, "2.427862806754703128312187495290458098651237887560730909", "-0.1743713000254530631340514050707360961763794687226999276"),
    ("1.5", "-2.5", 1, "-0.9359010884507957133181276600535710183648839051999759311", "-1.768191886644777377601371456834541735546169803475405012"),
    ("1.5", "-2.5", 2, "-0.1466038362806451019127863058778588155328528845999007803", "-2.578483144682776337876439768488797035562057141557821232"),
    ("1.5", "-2.5", 3, "0.5883277975219345746069957787932091541960845395444587516", "-2.806132122652818950556530663066961567808019914441071766"),
    ("1.5", "-2.5", 4, "1.051111528254564510371713737009861121933794660923396688", "-2.769495959358737425170640234623225129756371284824214988"),
    ("0.999", "0", 1, "6.907755278982137052053974364053092622803304465886318928", "0.0"),
    ("0.999", "0", 2, "1.637022605276117742695798604979500611630604263612875601", "0.0"),
    ("0.999", "0", 3, "1.200415353995464345188712338738235212534175229944010128", "0.0"),
    ("0.999", "0", 4, "1.081121397209822392363713588479835827014590273950526049", "0.0"),
    ("-5", "0.01", 1, "-1.791760858115014880927924877353954321689849397380999968", "0.001666665123459362134814499234972672114806610406950397088"),
    ("-5", "0.01", 2, "-2.749281042911406871071048380136542475672616223114068115", "0.003583517308580912404213757864471449003919864651253351794"),
    ("-5", "0.01", 3, "-3.537513352656822914557529729757542258097199042322654819", "0.005498556976638467527180574761563451310819386532595467704"),
    ("-5", "0.01", 4, "-4.106469555558993230397332986419079717391230489933046613", "0.007075022049977780948410877892685124034433564043638373992"),
    ("1e-20", "0", 1, "0.00000000000000000001000000000000000000005000000000000000000033333333333333", "0.0"),
    ("1e-20", "0", 2, "0.00000000000000000001000000000000000000002500000000000000000011111111111111", "0.0"),
    ("1e-20", "0", 3, "0.00000000000000000001000000000000000000001250000000000000000003703703703704", "0.0"),
    ("1e-20", "0", 4, "0.00000000000000000001000000000000000000000625000000000000000001234567901235", "0.0"),
    ("0.74", "0.2", 1, "1.114667315627226505508774197662933288191178787315771891", "0.6556956262415362026645197191844784755510258902459341728"),
    ("0.74", "0.2", 2, "0.910931220901441944109357990417317920995674312229777967", "0.3498331607654877367887187209486264609463064973439227956"),
    ("0.74", "0.2", 3, "0.8178558324858437959318096344636401033102199598396314263", "0.2573022447074617896529680303930125008415879289917511762"),
    ("0.74", "0.2", 4, "0.7763425090035791719922469696140269838918093991990779956", "0.2242977862987038644582951458353569460272802194153934339"),
    ("0.2", "-0.76", 1, "-0.09844085406264216897617070747600953052879942479238083553", "-0.7597627548757708289229611953999818240055229483884390018"),
    ("0.2", "-0.76", 2, "0.04819979822662923532612117578065128330395164131035333496", "-0.7855307145353402135433659120752815501415459167744027415"),
    ("0.2", "-0.76", 3, "0.1250969908855797424520863198304567622110118401903644341", "-0.7816204370480422005206825829074424418303436024107559402"),
    ("0.2", "-0.76", 4, "0.1633687688447293401635913932633892409173491507110072726", "-0.7737281623349106899560334242217558858381056209478767283"),
];

#[test]
fn matches_reference_table() {
    let p = 200;
    for &(zr, zi, j, vr, vi) in REFERENCE {
        let z = cx(zr, zi, p);
        let got = li(j, &z, p).unwrap();
        let want = cx(vr, vi, p);
        assert!(cwithin(&got, &want, 50), "Li_{j}({zr}+{zi}i) = {got:?}, want {want:?}");
    }
}

#[test]
fn classical_closed_forms() {
    let p = 256;
    let pi = pi(p);
    let ln2 = constant(ConstantName::Log2, p).unwrap();
    let z3 = constant(ConstantName::Zeta3, p).unwrap();
    let half = PrecComplex::from_f64(p, 0.5, 0.0);
    // Li_2(1/2) = π²/12 - ln²2/2
    let want2 = Float::with_val(p, pi.square_ref()) / 12u32 - Float::with_val(p, ln2.square_ref()) / 2u32;
    assert!(within(&li(2, &half, p).unwrap().re, &want2, 70));
    // Li_3(1/2) = 7/8 ζ(3) - π² ln2 / 12 + ln³2 / 6
    let want3 = Float::with_val(p, &z3 * 7u32) / 8u32 - Float::with_val(p, pi.square_ref()) * &ln2 / 12u32
        + Float::with_val(p, ln2.clone().pow(3u32)) / 6u32;
    assert!(within(&li(3, &half, p).unwrap().re, &want3, 70));
    // Li_4(1) = π⁴/90, Li_4(-1) = -7π⁴/720
    let pi4 = Float::with_val(p, pi.clone().pow(4u32));
    let one = PrecComplex::one(p);
    assert!(within(&li(4, &one, p).unwrap().re, &Float::with_val(p, &pi4 / 90u32), 70));
    let m1 = PrecComplex::from_f64(p, -1.0, 0.0);
    let want = -Float::with_val(p, &pi4 * 7u32) / 720u32;
    assert!(within(&li(4, &m1, p).unwrap().re, &want, 70));
    // Li_2(i) = -π²/48 + i G
    let i = PrecComplex::i(p);
    let g = constant(ConstantName::Catalan, p).unwrap();
    let v = li(2, &i, p).unwrap();
    assert!(within(&v.re, &Float::with_val(p, -Float::with_val(p, pi.square_ref()) / 48u32), 70));
    assert!(within(&v.im, &g, 70));
    // Li_0 is the constant -1/2
    let v = li_upto(4, &PrecComplex::from_f64(p, 0.3, 0.4), p).unwrap();
    assert_eq!(v[0].re, -0.5);
}
