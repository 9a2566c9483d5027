"""Oracle digit strings frozen from independent high-precision summation/evaluation."""

PI = (
    "3.1415926535897932384626433832795028841971693993751058209749445923078164"
    "062862089986280348253421170679821480865132823066470938446095505822317253"
    "594081284811174502841027019385211055596446229489549303819644288109756659"
    "334461284756482337867831652712019091456485669234603486104543266482133936"
    "072602491412737245870066063155881748815209209628292540917153643678925903"
    "600113305305488204665213841469519415116094330572703657595919530921861173"
    "819326117931051185480744623799627495673518857527248912279381830119491298"
    "336733624406566430860213949463952247371907021798609437027705392171762931"
    "767523846748184676694051320005681271452635608277857713427577896091736371"
    "787214684409012249534301465495853710507922796892589235420199561121290219"
    "608640344181598136297747713099605187072113499999983729780499510597317328"
    "160963185950244594553469083026425223082533446850352619311881710100031378"
    "387528865875332083814206171776691473035982534904287554687311595628638823"
    "537875937519577818577805321712268066130019278766111959092164201989380952"
    "572010654858632788659361533818279682303019520353018529689957736225994138"
    "91249721775283479131515574857242454150696"
)

S0_HALF = (
    "1.1803405990160962260453379405584885872337166348814472995158643994043041"
    "807207157949784586161958079542094501011740292391558983114363307772537179"
    "901431278907198180022631848551446228568968727290914938763567035131526302"
    "916966294160360929620596994708114931694510735455482288368551127932729308"
    "542681350952930150721252050562501929985875965308823634425612598226755198"
    "069995211240731261603162039175693541218683276929413095721235428538964841"
    "422109753898357049667178621838238977087340954876250984589313456259797012"
    "783650441595738187089403712449669273254118014112496048274590183868547091"
    "977755666227180131335726631660131266131004593"
)

S1_HALF = (
    "0.2696763005941896783339678611777763663829344827215200651699733159319414"
    "942432578414077960686137668857362825033467343837481034330918013437741147"
    "278584278929631980174661354255494137560891620167575168370086362508478521"
    "805087575638256372471177553181320420600191451697823270640562054675587067"
    "449832565854756746763376394526210986692703124890001766937015526791623425"
    "695848355618674160004361862051887286187221794668482070308460921249315765"
    "912920020486259449103315545693626363202380972369391234851674220813478876"
    "444095226039965194944692813330091349781864444966478130475122813463851125"
    "9441099297001850543857362956544618634745477276"
)

S0_THIRD = (
    "1.1595952669639283657699920515700208819451652634397828552631050597479737"
    "572052862586580852510511460710143752204967157749194722183752258421863742"
    "741867615349858765475564586845831286786752189122364493101630785116270163"
    "747855849058051634805227018152009437968468029439527030530840646934252314"
    "481737591873301651202485432341224008968790323027934070711664410452350618"
    "870151091411295164426422190595153770983186739931363804799976444888817309"
    "038375388394968236906156166085616272821480506049458465457765478465361129"
    "817365153038908900826783460896120935658098551237209824910469634714090884"
    "720926511379396440709375553082017182570279509"
)

S1_THIRD = (
    "0.2377247092708866183358763664038859949167902500801813185729447862121003"
    "865136739649025861906078235538141169701844528218793425840650469165346243"
    "778221544680456919970046753928612546951391356152610650305820646908740750"
    "459411159038322787926383065708529849602107456567601269040088009243216424"
    "540361011730519151505361319700496289104520922640975930845367283494401446"
    "225127643196545305241223772731791496465413357518521822691143809638332930"
    "581410296577685280749257329386331110244984397533913455178771377061211437"
    "910565621603290386757730994119848246722275691128029159675565063613835100"
    "5611557119848842089909191101693543325784308257"
)

F21 = (
    "3.0839288503800800729000364651552209896814059270218745853751257672403246"
    "405162883746149870737828316475369152544931908180104176727395479418691925"
    "844536386161950215954740627320744062024647537930250085622386362244476877"
    "097857610995848879676225075352957300297556891637221216586811328380523296"
    "405204336010125249486605626427438744563619676137698850922432660831344343"
    "157374481780851936106727090537208538119058653170166234997895878318920959"
    "267133734639705847145392083120545141437555112809332381118533500943169672"
    "477560358876662971611146287120443091731882986989815891091762345126193753"
    "102755776287843782434653251229027454317720475"
)

GAMMA14 = (
    "3.6256099082219083119306851558676720029951676828800654674333779995699192"
    "435387291216183601367233843003614717513924207199658915240940225599774264"
    "588903614506064137448968541949992019267730379946308922124123183237079920"
    "843973699070939056209292323428702741914486039571368350368654879959683684"
    "764758514890904041663407630339718066805957734237908559080714578312976356"
    "368825587928811190635168158508494748815027886731073105248798251663661287"
    "931641844174438276457548009199147768019228150926119943229978378353634595"
    "543419474370748085228164749238220776575826418476822922562418913478592065"
    "915675656387550732816689628247415478593239379"
)

GAMMA34 = (
    "1.2254167024651776451290983033628905268512392481080706112301189382898228"
    "884267983572371723762149150665821733802375880331630166590329610394793047"
    "102550599838227779192768900776510169014553316579159487594452773051593429"
    "003757863809604923883457598118730701935708569137276575665900075615110888"
    "436648859469735490742210427431525688369034412221619127710382947659661974"
    "008912490304484713138716933423392927580811224791334943122980567971689201"
    "418461558405395278090386567374626614176030655633718426736164075692542761"
    "987441407386712045221366487488318775652265656413858976882807428695273487"
    "122502551655478064315381845470197425629990328"
)

GAMMA13 = (
    "2.6789385347077476336556929409746776441286893779573011009504283275904176"
    "101677438195409828890411887894191590492000722633357190845695044722599777"
    "133677084697681672898230500032183425503222471569418175554499527287843947"
    "794413057658284016123191415964665260337275840205806355139432410320158394"
    "153827008552405210323387989550693638926386839167072816915423096273318811"
    "864774965222910556444090780096341646353274019563015283986002125069299687"
    "057100686454475449706712121643547412928626244253055345167510663698887957"
    "029494999998229048754057698734945403594486466181276011255010810071357748"
    "509182878889282690811130396508300618399030184"
)

GAMMA23 = (
    "1.3541179394264004169452880281545137855193272660567936983940224679637829"
    "654017425416758341479529729111064348236100330588541422615525862118266071"
    "911481143228334341559156209175056825923665233852119108580115017701536170"
    "238539453683177545997365041559306913842280346227627161503664990138463931"
    "446545975367506865906665990865527188229939042490008872609912259539945675"
    "789523966484939456538707768499152678624201021481815054894656265180904545"
    "573346940720908341200459829960481008274465304821349390094163156091434787"
    "732491341722300444046552602186774547767792157995719793496791022640053148"
    "956018116561282783892089625003426099291765917"
)

CUBIC_DESCEND_HALFCUBE = "0.079732314346464056434814672585244532224702880450949"

#: couple products s0**w * s1, keyed by (s, w)
COUPLE_PRODUCTS = {
    ("1/2", "1/3"): "0.285000243054567476121484945015317618785524773696378071735867609757049104545560373188962248244309357528325745034915132980842421693961792240557457554977778468374290909258118793904647386547391095380728222802249260209286765",
    ("1/2", "1/2"): "0.2929857207247517671366779116845435924755769156454467372575043712031755826994363249126430413703602174440165641114928314754166345346031253962725588595519192353799746317744132671231122192768269776066021469596598595687648551",
    ("1/2", "1"): "0.3183098861837906715377675267450287240689192914809128974953346881177935952684530701802276055325061719121456854535159160737858236922291573057559348214633996784584799338748181551461554927938506153774347857924347953233867248",
    ("1/2", "2"): "0.3757140817309208932139808605257193671617123422691367524226456877388702303166958606875305085816866005164442182340003902366526796807425375675507477883278763292402827487298922251082493957030753394775618274018643863366928702",
    ("1/2", "3"): "0.4434705842890577027057626806772607693432499598212991741549304949065891279740963985345763238974906097570633744647813678993986822670667429371389294573757900702291357878692010354909221635340424080310195338790569120511893478",
    ("1/3", "1/3"): "0.2497524763037067841466220847473825323060885896709403210727282769005179238185659605791946103680703776675700297103864011586453658349712496560270866155839605021118874287994011156845583819666359420293616652795728353944839217",
    ("1/3", "1/2"): "0.2559926770210278566868659102120568342533772553809638767742013399704936508984356454095354143234966241891812546675099455248823333155818547581818448154032444490278408546940701989004718443890876827813703507270499578534524592",
    ("1/3", "1"): "0.2756644477108960247556632491564847206986932401833203263996830101455151517346348974201900144115854446038490346627992905217050462163493046733263586091499960099913737856919350704480228725705092896434697121398345970199251854",
    ("1/3", "2"): "0.3196591888357803475077373418775937523279866044289502074782241383363677685488418129613586824230597006818687167097359404577418337340414912999199600972308216616330060087872306219317091132135870781082332646393481115193750171",
    ("1/3", "3"): "0.3706752824154995018836421584998175721812477753003371902637123727976728157281855204856717538282803837208202664534466807747861114005696404831669393224710245065933039581677926825994722614144674939943624595434212300727146433",
}
