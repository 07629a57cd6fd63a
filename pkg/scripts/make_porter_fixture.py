#!/usr/bin/env python3
"""Regenerate tests/fixtures/porter_vocab.txt.

Expected outputs come from the reference stemmer in tests/porter_reference.py
(the transliteration of the classic implementation); the production stemmer is
required to agree with every entry.
"""

from pathlib import Path
import sys

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from porter_reference import reference_stem  # noqa: E402

WORDS = """
a ability able abruptly accept acceptance accepted access accessed accessible
accessing accidentally accountability accusation achieve achieving acquire
acquisition act action activate activation active actively activities activity
adapt adaptation added addition additional additionally address addressed
adjustment administrator admission adoption advance advanced advantage
adversarial adversaries adversary advertise advisory affect affected agencies
agency agent aggregate aggregation agree agreed agreement algorithm allocate
allocation allow allowance allowed allows also alter alteration alternative
analysis analytical analyze analyzed angularity animal announcement anomalies
anomaly anticipate anticipation apparatus apparently appeal appearance appended
applicability applicable application applied applies apply appreciation
approach appropriate approval approximate approximation arbitrary archive
argued argument arise arising arrangement array article artificial assemble
assembly assert assertion assess assessment assign assignment assistance
associate association assume assumption attack attacked attacker attacking
attacks attempt attempted attenuation attribute attribution audit auditing
authentic authentication authorities authorization authorize authorized
automate automatic automatically automation availability available avoid
avoidance awareness backup balance bandwidth based baseline basically become
becoming began behavior being believable believe beneficial benefit bias
binaries binary bind binding bled bleeding blocked blocking bodies body
boundaries boundary breach breached broadcast broken browser buffer buffered
bugs build building bypass bypassed bypassing cached caches caching calculate
calculation called caller calling cancellation candidacy candidate capabilities
capability capture captured care career careful carefully caress caresses
carried carries carry carrying catalog cats caused causes causing cease ceased
certainly certificate certification chained challenge challenged challenging
changed changes changing channel channels character characterization
characterize checked checking checksum choice choose chosen cipher circulation
claimed clarification classed classification classified classifier classify
clearance clearly client clients cloud cluster clustered code coding collect
collected collection combination combine combined command commands comment
commercial commit commitment committed common commonly communicate
communication compare comparison compatibility compatible compilation compile
compiled complete completely completion complexity compliance complicated
component compose composition compromise compromised computation computational
compute computed computer computing concatenation conceal concealed concentrate
concentration concept conceptual concern concerned conclude conclusion
condition conditional conduct conducted conducting confidence confidential
confidentiality configuration configure configured confirm confirmation
conflate conflated conflict connect connected connecting connection
connectivity consent consequence consider considerable consideration considered
consistency consistent consisting console constant constantly constitute
construct construction consult consumption contact contain contained containing
container content context contextual continually continue continued continuing
continuity continuous contract contradiction contribute contribution control
controllable controlled controller controlling convention conventional
conversation conversion convert converted convey conviction cookie cookies
coordinate coordination copied copies copy copying correct corrected correction
correctly correlate correlation corrupt corrupted corruption costly could
counter counting countless coverage covered covering crack cracked crafted
crafting crashed crashes create created creates creating creation credential
credentials credibility credible critical critically cryptographic
cryptography curiosity current currently custom customarily customize cycle
cycles daily damage damaged damaging dangerous data database databases dated
dates dealing debug debugging deceive decided decision declaration declare
declared decode decoded decoding decompose decrease decreased decreasing
dedicated deed deep defau defaults defeat defeated defect defend defended
defender defense defensive deficiencies deficiency define defined defines
defining definite definition degradation degrade degree delay delayed delegate
deletion deliberate deliberately deliver delivered delivery demand
demonstrate demonstration denial denied denies deny depend dependence
dependencies dependency dependent depending deploy deployed deployment
deprecated depth derivation derive derived describe described describes
describing description design designated designed desirable destination
destroy destroyed destruction detail detailed detect detectable detected
detecting detection determination determine determined develop developed
developer developing development deviation device devices diagnose diagnosis
diagnostic dictionaries dictionary died difference different differently
difficult difficulties difficulty digital direct directed direction directly
directories directory disable disabled disclose disclosed disclosure
disconnect discover discovered discovery discuss discussion disguise disk
dispatch display displayed disposal disruption distinguish distribute
distributed distribution document documentation documented does doing domain
dominate dormant download downloaded dried dries driven driver dropped dual
dumped duplicate duplication durability duration dying dynamic dynamically
easily economic edge edit edition editor effect effective effectively
effectiveness efficiency efficient effort election electric electrical
electricity electronic element elevate elevation eliminate elimination
embedded emerge emergency emission employ employed enable enabled enabling
encapsulation encode encoded encoding encounter encountered encrypt encrypted
encryption endless endpoint enforce enforcement engine engineer engineering
enhance enhancement enormous enough ensure ensuring enter entire entirely
entities entitlement entity entries entry enumerate enumeration environment
environmental equal equality equally equip equipment equivalent error
escalate escalation escape escaped especially essential essentially establish
established establishment estimate estimated estimation evaluate evaluated
evaluation evasion event eventually everybody evidence exact exactly examine
examining example exceed excellent exception excessive exchange exclude
exclusion exclusive execute executed executing execution executive exercise
exfiltrate exfiltration exhaust exhaustion exist existence existing expand
expansion expect expectation expected expensive experience experiment
experimental expiration expire expired explain explanation explicit
explicitly exploit exploitation exploited exploiting exploits explore
exposed exposure express expression extend extended extension extensive
external externally extract extracted extraction facilities facility factor
factories factory fail failed failing failure fairly fallen falling false
falsification familiar families family fashion faster fatal fault faulty
feasibility feasible feature federal feed feedback fees fetch fetched field
fields file files filing fill filled filter filtered filtering final finally
financial find finding fingerprint finish finite firewall fixed fixes fixing
fizzed flag flagged flags flaw flawed flaws flexibility flexible flies flooding
flow flowing fluctuation focus focused follow followed following forbidden
force forced forces forcing forensic forge forged forgery form formal format
formation formatted formed formula forward forwarded found foundation framework
fraud fraudulent free freely frequencies frequency frequent frequently full
fully function functional functionality fundamental further gain gained
gaining gains gas gather gathered gathering general generalization generally
generate generated generates generating generation generator generic generous
genuine given gives giving global goes going gracefully grained grant granted
graph graphical greater greatly grew ground grouped grouping grows guarantee
guess guessed guessing guidance guide guideline handle handled handler
handling happen happened happening happily happiness happy harden hardware
harm harmful hashed hashes having hazard header headers heavily helpful hidden
hide hierarchical hierarchies hierarchy higher highest highly hijack hijacked
hijacking history hopeful hopefully hoping hospital host hosted hostile
hosting hped identical identification identified identifier identifies
identify identities identity illegal illegally illustrate image immediate
immediately immune impact impacted impersonate impersonation implement
implementation implemented implication implicit implicitly imply import
importance important imported impose imposed impossible improper improperly
improve improved improvement inability inaccessible inadequate inappropriate
incident include included includes including inclusion incoming incomplete
inconsistency inconsistent incorporate incorrect incorrectly increase
increased increasing increasingly incremental independence independent
independently index indexes indicate indication indicator indirect indirectly
individual individually induce induction industrial industries industry
infect infected infection inference infinite influence influenced inform
informal information informative informed infrastructure inherent inherently
inherit inheritance initial initialization initialize initialized initially
initiate initiation inject injected injecting injection input inputs insecure
insert inserted insertion inside insight inspect inspection install
installation installed instance instantiation instead instruct instruction
instrument insufficient integer integral integrate integration integrity
intelligence intelligent intend intended intense intensity intent intention
intentional intentionally interact interaction intercept intercepted
interception interest interesting interface interfaces interfere interference
intermediate internal internally interpret interpretation interpreted
interrupt interruption interval intervention introduce introduced
introduction intrusion invalid invalidate investigate investigation invisible
invocation invoke invoked involve involved involvement involving isolate
isolated isolation issue issued issues issuing iterate iteration iterative
keeping kernel keyboard keys kind knowing knowledge known label labeled
labels lack lacked lacking language large largely larger late latency lateral
latest launch launched launching layer layered layers leak leakage leaked
leaking learn learned learning leave leaving legacy legal legally legitimacy
legitimate length lets level levels leverage leveraged leveraging libraries
library lies lifecycle lifetime likelihood likely limit limitation limited
limiting limits lines link linked linking list listed listen listener
listening lists literal literally lived loaded loading local locally locate
location locked locking logged logger logging logic logical logically login
logs longer looking lookup loop looping loss lost lowercase lower lying
machine machines macro made mail main mainly maintain maintained maintenance
major majority make making malformed malicious maliciously malware manage
managed management manager managing mandatory manipulate manipulated
manipulating manipulation manner manual manually mapped mapping maps
masked masking masquerade massive match matched matches matching material
matrices matrix matter maximize maximum meaning meaningful means measure
measured measurement mechanical mechanism mediate medium meet member
membership memories memory mention mentioned merge merged message messages
metadata method methodologies methodology methods metric middle might
migration military mimic minimal minimize minimum mining misconfiguration
misinterpretation mislead misleading mismatch missing mission mistake
mistakenly misuse misused mitigate mitigation mixed mobile mode model modeled
modeling models moderate modern modification modified modifies modify
modifying module modules monitor monitored monitoring monolithic mostly
motivate motivation motoring mount mounted movement moving multiple
multiplication multiply mutual mutually named names namespace naming narrow
national native naturally nature navigate navigation nearly necessarily
necessary needed needing needs negative negotiate negotiation neither
nested network networked networking networks neural neutral newly nodes
noise nominal normal normalization normalize normally notable notation
noted notice noticed notification notify notion novel nullified number
numbered numbers numerous obfuscate obfuscation object objective objects
obligation observable observation observe observed obtain obtained obtaining
obvious obviously occasion occasionally occur occurred occurrence occurring
occurs offer offered offering official officially offline offset often
older once ones ongoing online only onto opened opening operate operated
operating operation operational operations operator opportunistic opportunity
oppose opposite optimal optimization optimize option optional optionally
order ordered ordering ordinary organization organize organized origin
original originally originate oscillate oscillation oscillators other
otherwise outcome outdated outgoing output outputs outside overall overcome
overflow overflowed overflowing overflows overhead overlap overload
overridden override overrun overview overwrite overwritten owned owner
ownership package packaged packages packet packets padding page pages
painful paired pairs panel paper parallel parameter parameters parse parsed
parser parsing part partial partially participate participation particular
particularly parties partition partly partner passed passes passing passive
password passwords patch patched patching path paths pattern patterns payload
payloads peer penetrate penetration people perceive percentage perception
perfect perfectly perform performance performed performing performs perhaps
period periodic periodically permanent permission permissions permit
permitted persist persistence persistent person personal perspective
persuade pertain phase phases phishing physical physically picture piece
pipeline pivot placed placement places placing plain plaintext plan planned
planning plaster plastered platform plausible played player pointed pointer
pointing points poisoned poisoning policies policy political pollution pool
pooled poorly popular popularity port portability portable portion ported
ports position positive possibility possible possibly post posted potential
potentially power powerful practical practically practice precaution
precede precedence precise precisely precision precondition predict
predictability predictable prediction prefer preference preferred prefix
preliminary premise preparation prepare prepared presence present
presentation presented preserve preserving pressed pressure presumably
pretend prevent prevented preventing prevention previous previously
primarily primary primitive principal principle printed printer prior
priorities prioritize priority privacy private privilege privileged
privileges probabilities probability probable probate probe probing problem
problematic problems procedure proceed process processed processes
processing processor produce produced produces producing product production
profession professional profile profiling program programmatic programmed
programmer programming programs progress prohibited project projected
projection prominent promise promote prompt prompted promptly proof
propagate propagation proper properly properties property proportion
proposal propose proposition protect protected protecting protection
protective protocol protocols prototype prove proven provide provided
provider provides providing provision proxies proxy public publication
publicly publish published purchase purely purpose purposes pushed
qualified qualities quality queries query querying question questionable
queue quick quickly quiet quietly radiation radical raise raised raising
random randomization randomized randomly randomness range ranged ranges
ranging ranked ranking rapid rapidly rare rarely rate rated rates rating
rational readable reader readily reading reads ready realistic reality
realize really reason reasonable reasonably rebuild recall receive
received receiver receives receiving recent recently reception recipient
recognition recognize recommend recommendation reconnaissance reconstruct
record recorded recording records recover recovery recursion recursive
redirect redirected redirection reduce reduced reduces reducing reduction
redundancy redundant refer reference referenced references referencing
referred refine reflect reflected reflection refresh refuse regard
regarding region register registered registration registry regular
regularly regulation reinforce reject rejected rejection relate related
relation relational relationship relative relatively relay release
released relevance relevant reliability reliable reliably reliance relied
relies reload rely relying remain remained remaining remains remark remedy
remote remotely removal remove removed removes removing renamed render
rendered rendering repeat repeated repeatedly repetition replace replaced
replacement replacing replay replayed replica replicate replication
replied replies reply report reported reporting reports repositories
repository represent representation representative represented represents
reproduce reputation request requested requesting requests require
required requirement requires requiring resend reserved reset resides
residual resilience resist resistance resolution resolve resolved resource
resources respect respective respond responded response responses
responsibilities responsibility responsible responsive restart restore
restrict restricted restriction restrictive result resulted resulting
results resume retain retained retention retrieval retrieve retrieved
retrieving retry return returned returning returns reuse reused reveal
revealed revealing reverse reversed reversible review reviewed revise
revision revoke rewrite rewritten riches rigorous risk risks robust
robustness role roles rolled rolling root rooted rotate rotation rough
roughly route routed router routine routing rule rules runs running
runtime safe safely safety sample sampled samples sampling sandbox
sanitization sanitize sanitized satisfaction satisfied satisfy saved
saving scalability scalable scale scaled scaling scan scanned scanner
scanning scenario scenarios schedule scheduled scheduling schema scheme
scope scoped scores screen script scripted scripting scripts search
searched searching second secondary secret secretly section sector secure
secured securely securing security seed seeds seeing seek seem seemingly
segment segmentation seize selected selection selective self send sender
sending sends sensitive sensitivity separate separated separately
separation sequence sequential serial serialization serialized series
serious seriously serve served server servers serves service services
serving session sessions setting settings setup several severe severely
severity shadow shall shape shaped shared sharing shell shifted shipping
short shortcut should showing shown shut side sides signal signature
signed significance significant significantly signing similar similarity
similarly simple simplicity simplified simplify simply simulate simulation
simultaneous simultaneously since single singular site sites sitting
situation sized sizes sizing skill skilled skip slight slightly slow
slowly small smaller smallest smart sniff sniffing social socket software
solely solid solution solve solved solving somebody something sometimes
somewhat source sources spared sparse spawn special specialized specially
specific specifically specification specified specifies specify specifying
speculative speed spent split spoof spoofed spoofing spread spying stable
stack staged stages staging standard standardized standing starting starts
stated statement states static station statistical statistically statistics
status stealing stealth stealthy stemmed stemming stems steps stolen stopped
storage store stored stores storing straightforward strategic strategies
strategy stream streaming strength strengthen stress strict strictly string
strings strip stripped stronger strongly structural structure structured
studied studies study studying style subject submission submit submitted
subsequent subsequently subset substantial substitute substitution subtle
succeed succeeded success successful successfully suffer sufficient
sufficiently suffix suggest suggested suggestion suitable suite summaries
summary supervision supplied supplies supply support supported supporting
supports suppose supposed suppress surface surprise surprisingly
surrounding survey survive susceptible suspect suspicious sustained
switch switched switching symbolic symbols synchronization synchronize
syntax synthesis synthesize synthetic system systematic systematically
systems tables tactic tactical tailored taken taking tampered tampering
tanned target targeted targeting targets task tasks team teams technical
technically technique techniques technologies technology temporal
temporarily temporary tends terminal terminate termination terminology
test tested testing tests text theft themes theoretical theoretically
theories theory thereby therefore thing think thinking third thorough
thoroughly thought thread threaded threat threaten threatening threats
threshold through throughout throughput tied tier ties time timely times
timing tokens tolerance tolerant took tool tools topic topics total
totally touch toward trace traced traces tracing track tracked tracking
trade tradeoff traditional traditionally traffic trailing training
transaction transfer transferred transform transformation transformed
transient transit transition translate translation transmission transmit
transmitted transparency transparent transport traversal traverse
treated treatment trees trend trial tried tries trigger triggered
triggering triggers trivial trivially trouble troubled truly truncate
truncated truncation trust trusted trusting trustworthy truth trying
tuning tunnel tunneling turned type types typical typically ultimate
ultimately unable unauthenticated unauthorized unavailable unaware
uncommon undefined under undergo underlying understand understanding
understood undetected unexpected unexpectedly unfortunately unhandled
unified uniform uniformly unintended unintentional unintentionally unique
uniquely unit units universal universally unknown unlike unlikely unlimited
unnecessary unpatched unprotected unrelated unrestricted unsafe untrusted
unusual unusually unvalidated unverified unwanted update updated updates
updating upgrade upload uploaded upper usability usable usage used useful
usefulness user users uses using usual usually utilities utility utilize
utilized utilizing valid validate validated validation validity valuable
value valued values variable variables variance variant variation varied
varies variety various vary varying vector vectors vendor vendors verbose
verification verified verifies verify version versions vertical viable
victim victims view viewed viewing violate violation virtual virtually
virus visibility visible visit visited visiting visitor visual
visualization vital vulnerabilities vulnerability vulnerable waiting
walked walking wanted warning watched watching weak weaken weakness
weaknesses wealth weaponize wearing website websites weight weighted
welcome wherever whether widely widespread willing window windows wire
wireless wished within without witness wonder worked worker working
workflow workload works workstation worldwide worried worrying worth
wrapped wrapper write writes writing written wrong wrote yearly yield
yielded zero zeroes zone zones
"""


def main() -> None:
    words = sorted(set(WORDS.split()))
    out = ROOT / "tests" / "fixtures" / "porter_vocab.txt"
    with open(out, "w", encoding="utf-8") as fh:
        for word in words:
            fh.write(f"{word} {reference_stem(word)}\n")
    print(f"wrote {len(words)} entries to {out}")


if __name__ == "__main__":
    main()
