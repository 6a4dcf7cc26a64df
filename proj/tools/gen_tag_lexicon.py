#!/usr/bin/env python3
"""Builds data/tag-lexicon.tsv, the baseline tagger's word -> tag table.

The table is assembled from closed-class word lists, regular and irregular
verb inflections, the bundled opinion lexicon and review-domain nouns.
Re-run after editing the lists below:

    python3 tools/gen_tag_lexicon.py > data/tag-lexicon.tsv
"""

import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent

CLOSED = {
    "DT": "a an the this that these those some any no every each either neither "
          "another all both half such what whatever",
    "PRP": "i me you he him she her it we us they them myself yourself himself "
           "herself itself ourselves themselves one",
    "PRP$": "my your his its our their",
    "IN": "about above across after against along among around as at before behind "
          "below beneath beside besides between beyond by despite during except for "
          "from in inside into like near of off on onto out outside over past since "
          "than through throughout toward towards under underneath unlike until upon "
          "via with within without because although though while whereas unless "
          "whether if",
    "CC": "and but or nor yet plus",
    "MD": "can could may might must shall should will would ca wo",
    "TO": "to",
    "EX": "there",
    "WDT": "which whichever",
    "WP": "who whom whoever",
    "WP$": "whose",
    "WRB": "how when where why wherever",
    "PDT": "quite",
    "RP": "up down",
    "UH": "oh wow yes ok okay hey",
    "CD": "zero two three four five six seven eight nine ten eleven twelve twenty "
          "thirty forty fifty hundred thousand million",
    "RB": "very really absolutely quite too so also just even still already "
          "almost always never not n't often sometimes usually rarely again ever "
          "here now then there today soon instead rather pretty somewhat fairly "
          "extremely highly totally completely entirely truly simply only mostly "
          "nearly hardly barely definitely certainly probably perhaps maybe "
          "actually especially particularly generally basically overall once twice "
          "else away back forward well fast much far enough "
          "anyway anywhere everywhere somewhere however therefore otherwise",
    "RBR": "more less",
    "RBS": "most least",
    "JJR": "better worse bigger smaller larger higher lower faster slower "
           "cheaper easier harder lighter heavier newer older longer shorter",
    "JJS": "best worst biggest smallest largest highest lowest fastest slowest "
           "cheapest easiest hardest lightest heaviest newest oldest longest",
    ".": ". ! ?",
    ",": ",",
    ":": ": ; -- ...",
    "HYPH": "-",
    "(": "(",
    ")": ")",
    "``": "``",
    "''": "'' \"",
    "$": "$",
    "#": "#",
    "POS": "'s",
}

BE = [("be", "VB"), ("am", "VBP"), ("are", "VBP"), ("is", "VBZ"), ("was", "VBD"),
      ("were", "VBD"), ("been", "VBN"), ("being", "VBG"), ("'m", "VBP"),
      ("'re", "VBP"), ("have", "VBP"), ("has", "VBZ"), ("had", "VBD"),
      ("having", "VBG"), ("'ve", "VBP"), ("do", "VBP"), ("does", "VBZ"),
      ("did", "VBD"), ("done", "VBN"), ("doing", "VBG")]

# base past participle (irregular)
IRREGULAR = """
begin began begun; break broke broken; bring brought brought; build built built;
buy bought bought; catch caught caught; choose chose chosen; come came come;
cost cost cost; cut cut cut; drive drove driven; eat ate eaten; fall fell fallen;
feel felt felt; find found found; fit fit fit; forget forgot forgotten;
get got gotten; give gave given; go went gone; grow grew grown; hang hung hung;
hear heard heard; hit hit hit; hold held held; keep kept kept; know knew known;
lay laid laid; lead led led; leave left left; lend lent lent; let let let;
lie lay lain; lose lost lost; make made made; mean meant meant; meet met met;
pay paid paid; put put put; read read read; ride rode ridden; ring rang rung;
rise rose risen; run ran run; say said said; see saw seen; sell sold sold;
send sent sent; set set set; shake shook shaken; shine shone shone;
shoot shot shot; show showed shown; shut shut shut; sit sat sat; sleep slept slept;
speak spoke spoken; spend spent spent; stand stood stood; steal stole stolen;
stick stuck stuck; strike struck struck; swing swung swung; take took taken;
teach taught taught; tear tore torn; tell told told; think thought thought;
throw threw thrown; understand understood understood; wake woke woken;
wear wore worn; win won won; write wrote written
"""

REGULAR_VERBS = """
accept add adjust admonish advise agree allow answer appear apply argue arrive ask
attach avoid bother call cancel capture carry caution change charge chatter check
clean click close compare complain connect consider contain continue control
convert copy correct crash create delete deliver depend describe design destroy
die disappoint display download drop edit enable end enjoy erase expect explain
fail fill finish fix focus follow freeze function gab handle happen hate help
hope ignore improve include install instruct intend interest jam lack last
launch learn like list listen live load lock look love manage match matter
mention miss move need notice offer open operate order own pack perform pick
plan play plug point prefer press prevent print produce promise protect provide
pull purchase push rate reach realize receive recharge recommend record reduce
refuse release remember remove repair replace reply report require reset
resolve respond restart return review rotate save scroll search seem select
serve settle shop shutter skip slide snap sound start stay stop store suggest
support suppose switch talk test thank touch transfer travel try turn upgrade
upload use view wait walk want warn wash watch wish wonder work worry zoom
"""

NOUNS = """
accessory adapter advantage picture alarm amazon angle answer application area arm
attachment audio auto autofocus back bag balance bar base battery beach bell
bit blur body book bottom box brand brightness budget bug button buyer cable
camcorder camera canon capacity card case casing cd cell charger chip choice
clarity clip color colour company computer connection connector construction
contrast control cord cost cover customer cycle daughter day deal default
defect degree design detail device dial difference disc disk display distance
dock document dollar door download drawback drive driver dvd ear earbud
earphone earpiece edge effect email end equipment error event exposure eye fact
factory family feature feel file film filter finger firmware fit flash focus
folder format frame friend front function game gig grip hand handset head
headphone headset heft hold home hour housing image info information ink input
interface internet issue item job jpeg key keyboard keypad kid kit lag laptop
lcd leather lens level life light line list lock look lot macro manual market
matter media megapixel memory menu message method microphone minute mode model
moment money monitor month motor mp3 music name network night nikon nokia
noise note number object operation option optics order output owner pack
package page panel part pc people performance person phone photo photographer
photography piece pixel place plastic player playback plenty plug point port
power price print printer problem product program purchase quality question
radio range rate reason receiver reception recording remote repair resolution
result review ring ringtone room sale screen second sensor service set setting
setup shape shipping shop shot shutter side signal size skin slot software
son song sound speaker speed star start stuff storage store strap style
subject support surface switch system tape tech thing time tone tool top
touch track transfer trip tripod tv type unit usb usage use user value version
video view viewfinder voice volume wall warranty way weather website week
weight wheel wife window word work world year zoom
"""

IRREGULAR_PLURALS = {"people": "NNS", "feet": "NNS", "men": "NNS", "women": "NNS",
                     "children": "NNS", "batteries": "NNS", "accessories": "NNS"}

NEUTRAL_ADJECTIVES = """
new old big small large little high low long short full empty main only other
same different whole certain real sure able available automatic digital
electronic extra external internal manual optical overall own particular
possible previous recent regular second single small special standard total
true wide black white red blue green gray grey silver previous optional
additional basic built-in close common current daily due early entire
final first last major minor next normal open original personal plain
similar usual various wireless
"""

# Opinion words whose dominant tag in reviews is not JJ.
NON_ADJECTIVE_OPINIONS = {
    "love": "VBP", "like": "IN", "hate": "VBP", "enjoy": "VBP", "recommend": "VBP",
    "appreciate": "VBP", "impress": "VB", "improve": "VB", "complain": "VB",
    "disappoint": "VB", "frustrate": "VB", "annoy": "VB", "bother": "VB",
    "crash": "NN", "crashes": "NNS", "crashed": "VBD", "crashing": "VBG",
    "fail": "VB", "fails": "VBZ", "failed": "VBD", "failing": "VBG",
    "dislike": "VBP", "succeed": "VB", "suffice": "VB", "win": "VB", "bless": "VB",
    "dazzle": "VB", "hurt": "VBD", "leak": "NN", "leaking": "VBG", "lack": "NN",
    "lacks": "VBZ", "lacking": "VBG", "lag": "NN", "scratch": "NN",
    "scratches": "NNS", "smudge": "NN", "malfunction": "NN", "mess": "NN",
    "noise": "NN", "hiss": "NN", "error": "NN", "problem": "NN",
    "problems": "NNS", "glitch": "NN", "glitches": "NNS", "defect": "NN",
    "drawback": "NN", "failure": "NN", "frustration": "NN", "headache": "NN",
    "disaster": "NN", "mistake": "NN", "pain": "NN", "trouble": "NN",
    "annoyance": "NN", "complaint": "NN", "disappointment": "NN",
    "junk": "NN", "garbage": "NN", "crap": "NN", "damage": "NN",
    "advantage": "NN", "bargain": "NN", "beauty": "NN", "bonus": "NN",
    "clarity": "NN", "delight": "NN", "improvement": "NN", "joy": "NN",
    "masterpiece": "NN", "merit": "NN", "success": "NN", "wow": "UH",
    "genius": "NN", "fun": "NN", "plus": "CC", "enough": "RB", "a+": "JJ",
    "crack": "NN", "complement": "VB", "static": "JJ", "broke": "VBD",
    "well-designed": "JJ", "well-made": "JJ", "quickly": "RB",
    "instantly": "RB", "unfortunately": "RB",
}

VERB_IRREGULAR_ING = {"die": "dying", "lie": "lying", "tie": "tying"}


def third_person(v):
    if v.endswith(("s", "sh", "ch", "x", "z", "o")):
        return v + "es"
    if v.endswith("y") and v[-2] not in "aeiou":
        return v[:-1] + "ies"
    return v + "s"


def past(v):
    if v.endswith("e"):
        return v + "d"
    if v.endswith("y") and v[-2] not in "aeiou":
        return v[:-1] + "ied"
    if (len(v) == 3 and v[-1] not in "aeiouwxy" and v[-2] in "aeiou"
            and v[-3] not in "aeiou"):
        return v + v[-1] + "ed"
    return v + "ed"


def gerund(v):
    if v in VERB_IRREGULAR_ING:
        return VERB_IRREGULAR_ING[v]
    if v.endswith("ie"):
        return v[:-2] + "ying"
    if v.endswith("e") and not v.endswith(("ee", "ye", "oe")):
        return v[:-1] + "ing"
    if (len(v) == 3 and v[-1] not in "aeiouwxy" and v[-2] in "aeiou"
            and v[-3] not in "aeiou"):
        return v + v[-1] + "ing"
    return v + "ing"


def plural(n):
    if n.endswith(("s", "sh", "ch", "x", "z")):
        return n + "es"
    if n.endswith("y") and n[-2] not in "aeiou":
        return n[:-1] + "ies"
    return n + "s"


def read_words(path):
    out = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if line and not line.startswith((";", "#")):
            out.append(line.lower())
    return out


def main():
    table = {}

    def put(word, tag, override=False):
        if override or word not in table:
            table[word] = tag

    for tag, words in CLOSED.items():
        for w in words.split():
            put(w, tag)
    for w, tag in BE:
        put(w, tag, override=True)

    for entry in IRREGULAR.replace("\n", " ").split(";"):
        parts = entry.split()
        if len(parts) != 3:
            continue
        base, pst, part = parts
        put(base, "VB")
        put(third_person(base), "VBZ")
        put(gerund(base), "VBG")
        put(pst, "VBD")
        if part != pst:
            put(part, "VBN")

    for v in REGULAR_VERBS.split():
        put(third_person(v), "VBZ")
        put(past(v), "VBD")
        put(gerund(v), "VBG")

    for w, tag in NON_ADJECTIVE_OPINIONS.items():
        put(w, tag, override=True)

    for n in NOUNS.split():
        put(n, "NN")
        put(plural(n), "NNS")
    for w, tag in IRREGULAR_PLURALS.items():
        put(w, tag, override=True)

    # Base verbs after nouns: "look", "sound", "zoom" stay nouns when listed.
    for v in REGULAR_VERBS.split():
        put(v, "VB")

    for w in NEUTRAL_ADJECTIVES.split():
        put(w, "JJ")

    for name in ("positive-words.txt", "negative-words.txt"):
        for w in read_words(ROOT / "data" / "opinion" / name):
            if w.endswith("ly") and "-" not in w and w not in (
                    "friendly", "lovely", "ugly", "jolly", "silly", "likely", "lonely",
                    "costly", "early", "daily", "cowardly", "unsightly"):
                put(w, "RB")
            elif w.endswith("est") and w not in ("honest",):
                put(w, "JJS")
            else:
                put(w, "JJ")

    out = sys.stdout
    out.write("# Baseline tag lexicon: word<TAB>Penn tag (most frequent tag).\n")
    out.write("# Generated by tools/gen_tag_lexicon.py; edit the script, not this file.\n")
    for word in sorted(table):
        out.write(f"{word}\t{table[word]}\n")
    capitalized = {"I": "PRP"}
    for word, tag in capitalized.items():
        out.write(f"{word}\t{tag}\n")


if __name__ == "__main__":
    main()
