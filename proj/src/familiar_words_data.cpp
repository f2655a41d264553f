// Generated by scripts/embed_data.py from data/familiar_words.txt; do not edit.
#include "demoji/familiar_word_data.hpp"

namespace demoji::readability {

// newline separated, lowercase
const char* k_familiar_words_raw =
    "a\nable\naboard\nabout\nabove\nabsent\naccept\naccident\naccount\nache\naching\nacorn\nacre\nacross\nact\nacts\nadd\naddress\nadmire\nadventure\nafar\nafraid\nafter\nafternoon\n"
    "afterward\nafterwards\nagain\nagainst\nage\naged\nago\nagree\nah\nahead\naid\naim\nair\nairfield\nairplane\nairport\nairship\nairy\nalarm\nalike\nalive\nall\nalley\nalligator\n"
    "allow\nalmost\nalone\nalong\naloud\nalready\nalso\nalways\nam\namong\namount\nan\nand\nangel\nanger\nangry\nanimal\nanother\nanswer\nant\nany\nanybody\nanyhow\nanyone\n"
    "anything\nanyway\nanywhere\napart\napartment\nape\napiece\nappear\napple\napril\napron\nare\naren't\narise\narithmetic\narm\narmful\narmy\narose\naround\narrange\narrive\narrived\narrow\n"
    "art\nartist\nas\nash\nashes\naside\nask\nasleep\nat\nate\nattack\nattend\nattention\naugust\naunt\nauthor\nauto\nautomobile\nautumn\navenue\nawake\nawaken\naway\nawful\n"
    "awfully\nawhile\nax\naxe\nbaa\nbabe\nbabies\nback\nbackground\nbackward\nbackwards\nbacon\nbad\nbadge\nbadly\nbag\nbake\nbaker\nbakery\nbaking\nball\nballoon\nbanana\nband\n"
    "bandage\nbang\nbanjo\nbank\nbanker\nbar\nbarber\nbare\nbarefoot\nbarely\nbark\nbarn\nbarrel\nbase\nbaseball\nbasement\nbasket\nbat\nbatch\nbath\nbathe\nbathing\nbathroom\nbathtub\n"
    "battle\nbattleship\nbay\nbe\nbeach\nbead\nbeam\nbean\nbear\nbeard\nbeast\nbeat\nbeating\nbeautiful\nbeautify\nbeauty\nbecame\nbecause\nbecome\nbecoming\nbed\nbedbug\nbedroom\nbedspread\n"
    "bedtime\nbee\nbeech\nbeef\nbeefsteak\nbeehive\nbeen\nbeer\nbeet\nbefore\nbeg\nbegan\nbeggar\nbegged\nbegin\nbeginning\nbegun\nbehave\nbehind\nbeing\nbelieve\nbell\nbelong\nbelow\n"
    "belt\nbench\nbend\nbeneath\nbent\nberries\nberry\nbeside\nbesides\nbest\nbet\nbetter\nbetween\nbib\nbible\nbicycle\nbid\nbig\nbigger\nbill\nbillboard\nbin\nbind\nbird\n"
    "birth\nbirthday\nbiscuit\nbit\nbite\nbiting\nbitter\nblack\nblackberry\nblackbird\nblackboard\nblackness\nblacksmith\nblame\nblank\nblanket\nblast\nblaze\nbleed\nbless\nblessing\nblew\nblind\nblindfold\n"
    "blinds\nblock\nblood\nbloom\nblossom\nblot\nblow\nblue\nblueberry\nbluebird\nblush\nboard\nboast\nboat\nbob\nbobwhite\nbodies\nbody\nboil\nboiler\nbold\nbone\nbonnet\nboo\n"
    "book\nbookcase\nbookkeeper\nboom\nboot\nborn\nborrow\nboss\nboth\nbother\nbottle\nbottom\nbought\nbounce\nbow\nbowl\nbowwow\nbox\nboxcar\nboxer\nboxes\nboy\nboyhood\nbracelet\n"
    "brain\nbrake\nbran\nbranch\nbrass\nbrave\nbread\nbreak\nbreakfast\nbreast\nbreath\nbreathe\nbreeze\nbrick\nbride\nbridge\nbright\nbrightness\nbring\nbroad\nbroadcast\nbroke\nbroken\nbrook\n"
    "broom\nbrother\nbrought\nbrown\nbrush\nbubble\nbucket\nbuckle\nbud\nbuffalo\nbug\nbuggy\nbuild\nbuilding\nbuilt\nbulb\nbull\nbullet\nbum\nbumblebee\nbump\nbun\nbunch\nbundle\n"
    "bunny\nburn\nburst\nbury\nbus\nbush\nbushel\nbusiness\nbusy\nbut\nbutcher\nbutt\nbutter\nbuttercup\nbutterfly\nbuttermilk\nbutterscotch\nbutton\nbuttonhole\nbuy\nbuzz\nby\nbye\ncab\n"
    "cabbage\ncabin\ncabinet\ncackle\ncage\ncake\ncalendar\ncalf\ncall\ncaller\ncalling\ncame\ncamel\ncamp\ncampfire\ncan\ncan't\ncanal\ncanary\ncandle\ncandlestick\ncandy\ncane\ncannon\n"
    "cannot\ncanoe\ncanyon\ncap\ncape\ncapital\ncaptain\ncar\ncard\ncardboard\ncare\ncareful\ncareless\ncarelessness\ncarload\ncarpenter\ncarpet\ncarriage\ncarrot\ncarry\ncart\ncarve\ncase\ncash\n"
    "cashier\ncastle\ncat\ncatbird\ncatch\ncatcher\ncaterpillar\ncatfish\ncatsup\ncattle\ncaught\ncause\ncave\nceiling\ncell\ncellar\ncent\ncenter\ncereal\ncertain\ncertainly\nchain\nchair\nchalk\n"
    "champion\nchance\nchange\nchap\ncharge\ncharm\nchart\nchase\nchatter\ncheap\ncheat\ncheck\ncheckers\ncheek\ncheer\ncheese\ncherry\nchest\nchew\nchick\nchicken\nchief\nchild\nchildhood\n"
    "children\nchill\nchilly\nchimney\nchin\nchina\nchip\nchipmunk\nchocolate\nchoice\nchoose\nchop\nchorus\nchose\nchosen\nchristen\nchristmas\nchurch\nchurn\ncigarette\ncircle\ncircus\ncitizen\ncity\n"
    "clang\nclap\nclass\nclassmate\nclassroom\nclaw\nclay\nclean\ncleaner\nclear\nclerk\nclever\nclick\ncliff\nclimb\nclip\ncloak\nclock\nclose\ncloset\ncloth\nclothes\nclothing\ncloud\n"
    "cloudy\nclover\nclown\nclub\ncluck\nclump\ncoach\ncoal\ncoast\ncoat\ncob\ncobbler\ncocoa\ncoconut\ncocoon\ncod\ncodfish\ncoffee\ncoffeepot\ncoin\ncold\ncollar\ncollege\ncolor\n"
    "colored\ncolt\ncolumn\ncomb\ncome\ncomfort\ncomic\ncoming\ncompany\ncompare\nconductor\ncone\nconnect\ncoo\ncook\ncooked\ncookie\ncookies\ncooking\ncool\ncooler\ncoop\ncopper\ncopy\n"
    "cord\ncork\ncorn\ncorner\ncorrect\ncost\ncot\ncottage\ncotton\ncouch\ncough\ncould\ncouldn't\ncount\ncounter\ncountry\ncounty\ncourse\ncourt\ncousin\ncover\ncow\ncoward\ncowardly\n"
    "cowboy\ncozy\ncrab\ncrack\ncracker\ncradle\ncramps\ncranberry\ncrank\ncranky\ncrash\ncrawl\ncrazy\ncream\ncreamy\ncreek\ncreep\ncrept\ncried\ncries\ncroak\ncrook\ncrooked\ncrop\n"
    "cross\ncross-eyed\ncrossing\ncrow\ncrowd\ncrowded\ncrown\ncruel\ncrumb\ncrumble\ncrush\ncrust\ncry\ncub\ncuff\ncup\ncupboard\ncupful\ncure\ncurl\ncurly\ncurtain\ncurve\ncushion\n"
    "custard\ncustomer\ncut\ncute\ncutting\ndab\ndad\ndaddy\ndaily\ndairy\ndaisy\ndam\ndamage\ndame\ndamp\ndance\ndancer\ndancing\ndandy\ndanger\ndangerous\ndare\ndark\ndarkness\n"
    "darling\ndarn\ndart\ndash\ndate\ndaughter\ndawn\nday\ndaybreak\ndaytime\ndead\ndeaf\ndeal\ndear\ndeath\ndecember\ndecide\ndeck\ndeed\ndeep\ndeer\ndefeat\ndefend\ndefense\n"
    "delight\nden\ndentist\ndepend\ndeposit\ndescribe\ndesert\ndeserve\ndesire\ndesk\ndestroy\ndevil\ndew\ndiamond\ndid\ndidn't\ndie\ndied\ndies\ndifference\ndifferent\ndig\ndim\ndime\n"
    "dine\nding-dong\ndinner\ndip\ndirect\ndirection\ndirt\ndirty\ndiscover\ndish\ndislike\ndismiss\nditch\ndive\ndiver\ndivide\ndo\ndock\ndoctor\ndoes\ndoesn't\ndog\ndoll\ndollar\n"
    "dolly\ndon't\ndone\ndonkey\ndoor\ndoorbell\ndoorknob\ndoorstep\ndope\ndot\ndouble\ndough\ndove\ndown\ndownstairs\ndowntown\ndozen\ndrag\ndrain\ndrank\ndraw\ndrawer\ndrawing\ndream\n"
    "dress\ndresser\ndressmaker\ndrew\ndried\ndrift\ndrill\ndrink\ndrip\ndrive\ndriven\ndriver\ndrop\ndrove\ndrown\ndrowsy\ndrub\ndrum\ndrunk\ndry\nduck\ndue\ndug\ndull\n"
    "dumb\ndump\nduring\ndust\ndusty\nduty\ndwarf\ndwell\ndwelt\ndying\neach\neager\neagle\near\nearly\nearn\nearth\neast\neastern\neasy\neat\neaten\nedge\negg\n"
    "eh\neight\neighteen\neighth\neighty\neither\nelbow\nelder\neldest\nelectric\nelectricity\nelephant\neleven\nelf\nelm\nelse\nelsewhere\nempty\nend\nending\nenemy\nengine\nengineer\nenglish\n"
    "enjoy\nenough\nenter\nenvelope\nequal\nerase\neraser\nerrand\nescape\neve\neven\nevening\never\nevery\neverybody\neveryday\neveryone\neverything\neverywhere\nevil\nexact\nexcept\nexchange\nexcited\n"
    "exciting\nexcuse\nexit\nexpect\nexplain\nextra\neye\neyebrow\nfable\nface\nfacing\nfact\nfactory\nfail\nfaint\nfair\nfairy\nfaith\nfake\nfall\nfalse\nfamily\nfan\nfancy\n"
    "far\nfar-off\nfaraway\nfare\nfarm\nfarmer\nfarming\nfarther\nfashion\nfast\nfasten\nfat\nfather\nfault\nfavor\nfavorite\nfear\nfeast\nfeather\nfebruary\nfed\nfeed\nfeel\nfeet\n"
    "fell\nfellow\nfelt\nfence\nfever\nfew\nfib\nfiddle\nfield\nfife\nfifteen\nfifth\nfifty\nfig\nfight\nfigure\nfile\nfill\nfilm\nfinally\nfind\nfine\nfinger\nfinish\n"
    "fire\nfirearm\nfirecracker\nfireplace\nfireworks\nfiring\nfirst\nfish\nfisherman\nfist\nfit\nfits\nfive\nfix\nflag\nflake\nflame\nflap\nflash\nflashlight\nflat\nflea\nflesh\nflew\n"
    "flies\nflight\nflip\nflip-flop\nfloat\nflock\nflood\nfloor\nflop\nflour\nflow\nflower\nflowery\nflutter\nfly\nfoam\nfog\nfoggy\nfold\nfolks\nfollow\nfollowing\nfond\nfood\n"
    "fool\nfoolish\nfoot\nfootball\nfootprint\nfor\nforehead\nforest\nforget\nforgive\nforgot\nforgotten\nfork\nform\nfort\nforth\nfortune\nforty\nforward\nfought\nfound\nfountain\nfour\nfourteen\n"
    "fourth\nfox\nframe\nfree\nfreedom\nfreeze\nfreight\nfrench\nfresh\nfret\nfriday\nfried\nfriend\nfriendly\nfriendship\nfrighten\nfrog\nfrom\nfront\nfrost\nfrown\nfroze\nfruit\nfry\n"
    "fudge\nfuel\nfull\nfully\nfun\nfunny\nfur\nfurniture\nfurther\nfuzzy\ngain\ngallon\ngallop\ngame\ngang\ngarage\ngarbage\ngarden\ngas\ngasoline\ngate\ngather\ngave\ngay\n"
    "gear\ngeese\ngeneral\ngentle\ngentleman\ngentlemen\ngeography\nget\ngetting\ngiant\ngift\ngingerbread\ngirl\ngive\ngiven\ngiving\nglad\ngladly\nglance\nglass\nglasses\ngleam\nglide\nglory\n"
    "glove\nglow\nglue\ngo\ngoal\ngoat\ngobble\ngod\ngodmother\ngoes\ngoing\ngold\ngolden\ngoldfish\ngolf\ngone\ngood\ngood-by\ngood-bye\ngood-looking\ngoodbye\ngoodness\ngoods\ngoody\n"
    "goose\ngooseberry\ngot\ngovern\ngovernment\ngown\ngrab\ngracious\ngrade\ngrain\ngrand\ngrandchild\ngrandchildren\ngranddaughter\ngrandfather\ngrandma\ngrandmother\ngrandpa\ngrandson\ngrandstand\ngrape\ngrapefruit\ngrapes\ngrass\n"
    "grasshopper\ngrateful\ngrave\ngravel\ngraveyard\ngravy\ngray\ngraze\ngrease\ngreat\ngreen\ngreet\ngrew\ngrind\ngroan\ngrocery\nground\ngroup\ngrove\ngrow\ngrown\nguard\nguess\nguest\n"
    "guide\ngulf\ngum\ngun\ngunpowder\nguy\nha\nhabit\nhad\nhadn't\nhail\nhair\nhaircut\nhairpin\nhalf\nhall\nhalt\nham\nhammer\nhand\nhandful\nhandkerchief\nhandle\nhandwriting\n"
    "hang\nhappen\nhappily\nhappiness\nhappy\nharbor\nhard\nhardly\nhardship\nhardware\nhare\nhark\nharm\nharness\nharp\nharvest\nhas\nhasn't\nhaste\nhasten\nhasty\nhat\nhatch\nhatchet\n"
    "hate\nhaul\nhave\nhaven't\nhaving\nhawk\nhay\nhayfield\nhaystack\nhe\nhe'd\nhe'll\nhe's\nhead\nheadache\nheal\nhealth\nhealthy\nheap\nhear\nheard\nhearing\nheart\nheat\n"
    "heater\nheaven\nheavy\nheel\nheight\nheld\nhell\nhello\nhelmet\nhelp\nhelper\nhelpful\nhem\nhen\nhenhouse\nher\nherd\nhere\nhere's\nhero\nhers\nherself\nhey\nhickory\n"
    "hid\nhidden\nhide\nhigh\nhighway\nhill\nhillside\nhilltop\nhilly\nhim\nhimself\nhind\nhint\nhip\nhire\nhis\nhiss\nhistory\nhit\nhitch\nhive\nho\nhoe\nhog\n"
    "hold\nholder\nhole\nholiday\nhollow\nholy\nhome\nhomely\nhomesick\nhonest\nhoney\nhoneybee\nhoneymoon\nhonk\nhonor\nhood\nhoof\nhook\nhoop\nhop\nhope\nhopeful\nhopeless\nhorn\n"
    "horse\nhorseback\nhorseshoe\nhose\nhospital\nhost\nhot\nhotel\nhound\nhour\nhouse\nhousetop\nhousewife\nhousework\nhow\nhowever\nhowl\nhug\nhuge\nhum\nhumble\nhump\nhundred\nhung\n"
    "hunger\nhungry\nhunk\nhunt\nhunter\nhurrah\nhurried\nhurry\nhurt\nhusband\nhush\nhut\nhymn\ni\ni'd\ni'll\ni've\nice\nicy\nidea\nideal\nif\nill\nimportant\n"
    "impossible\nimprove\nin\ninch\ninches\nincome\nindeed\nindian\nindoors\nink\ninn\ninsect\ninside\ninstant\ninstead\ninsult\nintend\ninterested\ninteresting\ninto\ninvite\niron\nis\nisland\n"
    "isn't\nit\nit's\nits\nitself\nivory\nivy\njacket\njacks\njail\njam\njanuary\njar\njaw\njay\njelly\njellyfish\njerk\njig\njob\njockey\njoin\njoke\njoking\n"
    "jolly\njourney\njoy\njoyful\njoyous\njudge\njug\njuice\njuicy\njuly\njump\njune\njunior\njunk\njust\nkeen\nkeep\nkept\nkettle\nkey\nkick\nkid\nkill\nkilled\n"
    "kind\nkindly\nkindness\nking\nkingdom\nkiss\nkitchen\nkite\nkitten\nkitty\nknee\nkneel\nknew\nknife\nknit\nknives\nknob\nknock\nknot\nknow\nknown\nlace\nlad\nladder\n"
    "ladies\nlady\nlaid\nlake\nlamb\nlame\nlamp\nland\nlane\nlanguage\nlantern\nlap\nlard\nlarge\nlash\nlass\nlast\nlate\nlaugh\nlaundry\nlaw\nlawn\nlawyer\nlay\n"
    "lazy\nlead\nleader\nleaf\nleak\nlean\nleap\nlearn\nlearned\nleast\nleather\nleave\nleaving\nled\nleft\nleg\nlemon\nlemonade\nlend\nlength\nless\nlesson\nlet\nlet's\n"
    "letter\nletting\nlettuce\nlevel\nliberty\nlibrary\nlice\nlick\nlid\nlie\nlife\nlift\nlight\nlightness\nlightning\nlike\nlikely\nliking\nlily\nlimb\nlime\nlimp\nline\nlinen\n"
    "lion\nlip\nlist\nlisten\nlit\nlittle\nlive\nlively\nliver\nlives\nliving\nlizard\nload\nloaf\nloan\nloaves\nlock\nlocomotive\nlog\nlone\nlonely\nlonesome\nlong\nlook\n"
    "lookout\nloop\nloose\nlord\nlose\nloser\nloss\nlost\nlot\nloud\nlove\nlovely\nlover\nlow\nluck\nlucky\nlumber\nlump\nlunch\nlying\nmachine\nmachinery\nmad\nmade\n"
    "magazine\nmagic\nmaid\nmail\nmailbox\nmailman\nmajor\nmake\nmaking\nmale\nmama\nmamma\nman\nmanager\nmane\nmanger\nmany\nmap\nmaple\nmarble\nmarch\nmare\nmark\nmarket\n"
    "marriage\nmarried\nmarry\nmask\nmast\nmaster\nmat\nmatch\nmatter\nmattress\nmay\nmaybe\nmayor\nmaypole\nme\nmeadow\nmeal\nmean\nmeans\nmeant\nmeasure\nmeat\nmedicine\nmeet\n"
    "meeting\nmelt\nmember\nmen\nmend\nmeow\nmerry\nmess\nmessage\nmet\nmetal\nmew\nmice\nmiddle\nmidnight\nmight\nmighty\nmile\nmiler\nmilk\nmilkman\nmill\nmillion\nmind\n"
    "mine\nminer\nmint\nminute\nmirror\nmischief\nmiss\nmisspell\nmistake\nmisty\nmitt\nmitten\nmix\nmoment\nmonday\nmoney\nmonkey\nmonth\nmoo\nmoon\nmoonlight\nmoose\nmop\nmore\n"
    "morning\nmorrow\nmoss\nmost\nmostly\nmother\nmotor\nmount\nmountain\nmouse\nmouth\nmove\nmovie\nmovies\nmoving\nmow\nmuch\nmud\nmuddy\nmug\nmule\nmultiply\nmurder\nmusic\n"
    "must\nmy\nmyself\nnail\nname\nnap\nnapkin\nnarrow\nnasty\nnaughty\nnavy\nnear\nnearby\nnearly\nneat\nneck\nnecktie\nneed\nneedle\nneedn't\nnegro\nneighbor\nneighborhood\nneither\n"
    "nerve\nnest\nnet\nnever\nnevermore\nnew\nnews\nnewspaper\nnext\nnibble\nnice\nnickel\nnight\nnightgown\nnine\nnineteen\nninety\nno\nnobody\nnod\nnoise\nnoisy\nnone\nnoon\n"
    "nor\nnorth\nnorthern\nnose\nnot\nnote\nnothing\nnotice\nnovember\nnow\nnowhere\nnumber\nnurse\nnut\no'clock\noak\noar\noatmeal\noats\nobey\nocean\noctober\nodd\nof\n"
    "off\noffer\noffice\nofficer\noften\noh\noil\nold\nold-fashioned\non\nonce\none\nonion\nonly\nonward\nopen\nor\norange\norchard\norder\nore\norgan\nother\notherwise\n"
    "ouch\nought\nour\nours\nourselves\nout\noutdoors\noutfit\noutlaw\noutline\noutside\noutward\noven\nover\noveralls\novercoat\novereat\noverhead\noverhear\novernight\noverturn\nowe\nowing\nowl\n"
    "own\nowner\nox\npa\npace\npack\npackage\npad\npage\npaid\npail\npain\npainful\npaint\npainter\npainting\npair\npal\npalace\npale\npan\npancake\npane\npansy\n"
    "pants\npapa\npaper\nparade\npardon\nparent\npark\npart\npartly\npartner\nparty\npass\npassenger\npast\npaste\npasture\npat\npatch\npath\npatter\npave\npavement\npaw\npay\n"
    "payment\npea\npeace\npeaceful\npeach\npeaches\npeak\npeanut\npear\npearl\npeas\npeck\npeek\npeel\npeep\npeg\npen\npencil\npenny\npeople\npepper\npeppermint\nperfume\nperhaps\n"
    "person\npet\nphone\npiano\npick\npickle\npicnic\npicture\npie\npiece\npig\npigeon\npiggy\npile\npill\npillow\npin\npine\npineapple\npink\npint\npipe\npistol\npit\n"
    "pitch\npitcher\npity\nplace\nplain\nplan\nplane\nplant\nplate\nplatform\nplatter\nplay\nplayer\nplayground\nplayhouse\nplaymate\nplaything\npleasant\nplease\npleasure\nplenty\nplow\nplug\nplum\n"
    "pocket\npocketbook\npoem\npoint\npoison\npoke\npole\npolice\npoliceman\npolish\npolite\npond\nponies\npony\npool\npoor\npop\npopcorn\npopped\nporch\npork\npossible\npost\npostage\n"
    "postman\npot\npotato\npotatoes\npound\npour\npowder\npower\npowerful\npraise\npray\nprayer\nprepare\npresent\npretty\nprice\nprick\nprince\nprincess\nprint\nprison\nprize\npromise\nproper\n"
    "protect\nproud\nprove\nprune\npublic\npuddle\npuff\npull\npump\npumpkin\npunch\npunish\npup\npupil\npuppy\npure\npurple\npurse\npush\npuss\npussy\npussycat\nput\nputting\n"
    "puzzle\nquack\nquart\nquarter\nqueen\nqueer\nquestion\nquick\nquickly\nquiet\nquilt\nquit\nquite\nrabbit\nrace\nrack\nradio\nradish\nrag\nrail\nrailroad\nrailway\nrain\nrainbow\n"
    "rainy\nraise\nraisin\nrake\nram\nran\nranch\nrang\nrap\nrapidly\nrat\nrate\nrather\nrattle\nraw\nray\nreach\nread\nreader\nreading\nready\nreal\nreally\nreap\n"
    "rear\nreason\nrebuild\nreceive\nrecess\nrecord\nred\nredbird\nredbreast\nrefuse\nreindeer\nrejoice\nremain\nremember\nremind\nremove\nrent\nrepair\nrepay\nrepeat\nreport\nrest\nreturn\nreview\n"
    "reward\nrib\nribbon\nrice\nrich\nrid\nriddle\nride\nrider\nriding\nright\nrim\nring\nrip\nripe\nrise\nrising\nriver\nroad\nroadside\nroar\nroast\nrob\nrobber\n"
    "robe\nrobin\nrock\nrocket\nrocky\nrode\nroll\nroller\nroof\nroom\nrooster\nroot\nrope\nrose\nrosebud\nrot\nrotten\nrough\nround\nroute\nrow\nrowboat\nroyal\nrub\n"
    "rubbed\nrubber\nrubbish\nrug\nrule\nruler\nrumble\nrun\nrung\nrunner\nrunning\nrush\nrust\nrusty\nrye\nsack\nsad\nsaddle\nsadness\nsafe\nsafety\nsaid\nsail\nsailboat\n"
    "sailor\nsaint\nsalad\nsale\nsalt\nsame\nsand\nsandwich\nsandy\nsang\nsank\nsap\nsash\nsat\nsatin\nsatisfactory\nsaturday\nsausage\nsavage\nsave\nsavings\nsaw\nsay\nscab\n"
    "scales\nscare\nscarf\nschool\nschoolboy\nschoolhouse\nschoolmaster\nschoolroom\nscorch\nscore\nscrap\nscrape\nscratch\nscream\nscreen\nscrew\nscrub\nsea\nseal\nseam\nsearch\nseason\nseat\nsecond\n"
    "secret\nsee\nseed\nseeing\nseek\nseem\nseen\nseesaw\nselect\nself\nselfish\nsell\nsend\nsense\nsent\nsentence\nseparate\nseptember\nservant\nserve\nservice\nset\nsetting\nsettle\n"
    "settlement\nseven\nseventeen\nseventh\nseventy\nseveral\nsew\nshade\nshadow\nshady\nshake\nshaker\nshaking\nshall\nshame\nshan't\nshape\nshare\nsharp\nshave\nshe\nshe'd\nshe'll\nshe's\n"
    "shear\nshears\nshed\nsheep\nsheet\nshelf\nshell\nshepherd\nshine\nshining\nshiny\nship\nshirt\nshock\nshoe\nshoemaker\nshone\nshook\nshoot\nshop\nshopping\nshore\nshort\nshot\n"
    "should\nshoulder\nshouldn't\nshout\nshovel\nshow\nshut\nshy\nsick\nsickness\nside\nsidewalk\nsideways\nsigh\nsight\nsign\nsilence\nsilent\nsilk\nsill\nsilly\nsilver\nsimple\nsin\n"
    "since\nsing\nsinger\nsingle\nsink\nsip\nsir\nsis\nsissy\nsister\nsit\nsitting\nsix\nsixteen\nsixth\nsixty\nsize\nskate\nskater\nski\nskin\nskip\nskirt\nsky\n"
    "slam\nslap\nslate\nslave\nsled\nsleep\nsleepy\nsleeve\nsleigh\nslept\nslice\nslid\nslide\nsling\nslip\nslipped\nslipper\nslippery\nslit\nslow\nslowly\nsly\nsmack\nsmall\n"
    "smart\nsmell\nsmile\nsmoke\nsmooth\nsnail\nsnake\nsnap\nsnapping\nsneeze\nsnow\nsnowball\nsnowflake\nsnowy\nsnuff\nsnug\nso\nsoak\nsoap\nsob\nsocks\nsod\nsoda\nsofa\n"
    "soft\nsoil\nsold\nsoldier\nsole\nsome\nsomebody\nsomehow\nsomeone\nsomething\nsometime\nsometimes\nsomewhere\nson\nsong\nsoon\nsore\nsorrow\nsorry\nsort\nsoul\nsound\nsoup\nsour\n"
    "south\nsouthern\nspace\nspade\nspank\nsparrow\nspeak\nspeaker\nspear\nspeech\nspeed\nspell\nspelling\nspend\nspent\nspider\nspike\nspill\nspin\nspinach\nspirit\nspit\nsplash\nspoil\n"
    "spoke\nspook\nspoon\nsport\nspot\nspread\nspring\nspringtime\nsprinkle\nsquare\nsquash\nsqueak\nsqueeze\nsquirrel\nstable\nstack\nstage\nstair\nstall\nstamp\nstand\nstar\nstare\nstart\n"
    "starve\nstate\nstates\nstation\nstay\nsteak\nsteal\nsteam\nsteamboat\nsteamer\nsteel\nsteep\nsteeple\nsteer\nstem\nstep\nstepping\nstick\nsticky\nstiff\nstill\nstillness\nsting\nstir\n"
    "stitch\nstock\nstocking\nstole\nstone\nstood\nstool\nstoop\nstop\nstopped\nstopping\nstore\nstories\nstork\nstorm\nstormy\nstory\nstove\nstraight\nstrange\nstranger\nstrap\nstraw\nstrawberry\n"
    "stream\nstreet\nstretch\nstring\nstrip\nstripes\nstrong\nstuck\nstudy\nstuff\nstump\nstung\nsubject\nsuch\nsuck\nsudden\nsuffer\nsugar\nsuit\nsum\nsummer\nsun\nsunday\nsunflower\n"
    "sung\nsunk\nsunlight\nsunny\nsunrise\nsunset\nsunshine\nsupper\nsuppose\nsure\nsurely\nsurface\nsurprise\nswallow\nswam\nswamp\nswan\nswat\nswear\nsweat\nsweater\nsweep\nsweet\nsweetheart\n"
    "sweetness\nswell\nswept\nswift\nswim\nswimming\nswing\nswitch\nsword\nswore\ntable\ntablecloth\ntablespoon\ntablet\ntack\ntag\ntail\ntailor\ntake\ntaken\ntaking\ntale\ntalk\ntalker\n"
    "tall\ntame\ntan\ntank\ntap\ntape\ntar\ntardy\ntask\ntaste\ntaught\ntax\ntea\nteach\nteacher\nteam\ntear\ntease\nteaspoon\nteeth\ntelephone\ntell\ntemper\nten\n"
    "tennis\ntent\nterm\nterrible\ntest\nthan\nthank\nthankful\nthanks\nthanksgiving\nthat\nthat's\nthe\ntheater\nthee\ntheir\nthem\nthen\nthere\nthese\nthey\nthey'd\nthey'll\nthey're\n"
    "they've\nthick\nthief\nthimble\nthin\nthing\nthink\nthird\nthirsty\nthirteen\nthirty\nthis\nthorn\nthose\nthough\nthought\nthousand\nthread\nthree\nthrew\nthroat\nthrone\nthrough\nthrow\n"
    "thrown\nthumb\nthunder\nthursday\nthy\ntick\nticket\ntickle\ntie\ntiger\ntight\ntill\ntime\ntin\ntinkle\ntiny\ntip\ntiptoe\ntire\ntired\ntitle\nto\ntoad\ntoadstool\n"
    "toast\ntobacco\ntoday\ntoe\ntogether\ntoilet\ntold\ntomato\ntomorrow\nton\ntone\ntongue\ntonight\ntoo\ntook\ntool\ntoot\ntooth\ntoothbrush\ntoothpick\ntop\ntore\ntorn\ntoss\n"
    "touch\ntow\ntoward\ntowards\ntowel\ntower\ntown\ntoy\ntrace\ntrack\ntrade\ntrain\ntramp\ntrap\ntray\ntreasure\ntreat\ntree\ntrick\ntricycle\ntried\ntrim\ntrip\ntrolley\n"
    "trouble\ntruck\ntrue\ntruly\ntrunk\ntrust\ntruth\ntry\ntub\ntuesday\ntug\ntulip\ntumble\ntune\ntunnel\nturkey\nturn\nturtle\ntwelve\ntwenty\ntwice\ntwig\ntwin\ntwo\n"
    "ugly\numbrella\nuncle\nunder\nunderstand\nunderwear\nundress\nunfair\nunfinished\nunfold\nunfriendly\nunhappy\nunhurt\nuniform\nunited\nunkind\nunknown\nunless\nunpleasant\nuntil\nunwilling\nup\nupon\nupper\n"
    "upset\nupside\nupstairs\nuptown\nupward\nus\nuse\nused\nuseful\nvalentine\nvalley\nvaluable\nvalue\nvase\nvegetable\nvelvet\nvery\nvessel\nvictory\nview\nvillage\nvine\nviolet\nvisit\n"
    "visitor\nvoice\nvote\nwag\nwagon\nwaist\nwait\nwake\nwaken\nwalk\nwall\nwalnut\nwant\nwar\nwarm\nwarn\nwas\nwash\nwasher\nwashtub\nwasn't\nwaste\nwatch\nwatchman\n"
    "water\nwatermelon\nwaterproof\nwave\nwax\nway\nwayside\nwe\nwe'd\nwe'll\nwe're\nwe've\nweak\nweaken\nweakness\nwealth\nweapon\nwear\nweary\nweather\nweave\nweb\nwedding\nwednesday\n"
    "wee\nweed\nweek\nweep\nweigh\nwelcome\nwell\nwent\nwere\nwest\nwestern\nwet\nwhale\nwhat\nwhat's\nwheat\nwheel\nwhen\nwhenever\nwhere\nwhich\nwhile\nwhip\nwhipped\n"
    "whirl\nwhiskey\nwhisky\nwhisper\nwhistle\nwhite\nwho\nwho'd\nwho'll\nwho's\nwhole\nwhom\nwhose\nwhy\nwicked\nwide\nwife\nwiggle\nwild\nwildcat\nwill\nwilling\nwillow\nwin\n"
    "wind\nwindmill\nwindow\nwindy\nwine\nwing\nwink\nwinner\nwinter\nwipe\nwire\nwise\nwish\nwit\nwitch\nwith\nwithout\nwoke\nwolf\nwoman\nwomen\nwon\nwon't\nwonder\n"
    "wonderful\nwood\nwooden\nwoodpecker\nwoods\nwool\nwoolen\nword\nwore\nwork\nworker\nworkman\nworld\nworm\nworn\nworry\nworse\nworst\nworth\nwould\nwouldn't\nwound\nwove\nwrap\n"
    "wrapped\nwreck\nwren\nwring\nwrite\nwriting\nwritten\nwrong\nwrote\nwrung\nyard\nyarn\nyear\nyell\nyellow\nyes\nyesterday\nyet\nyolk\nyonder\nyou\nyou'd\nyou'll\nyou're\n"
    "you've\nyoung\nyoungster\nyour\nyours\nyourself\nyourselves\nyouth\n";

}  // namespace demoji::readability
