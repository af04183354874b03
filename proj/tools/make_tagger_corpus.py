#!/usr/bin/env python3
# Copyright 2026 The citectx Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates a seeded, Penn-tagged corpus of citance-like sentences.

Output is one sentence per line of lowercase word/TAG pairs, word tokens
only, matching what the citance tokenizer hands to the tagger.
"""

import argparse
import random

# base, 3sg, past, past participle, gerund
VERBS = [
    ("meet", "meets", "met", "met", "meeting"),
    ("make", "makes", "made", "made", "making"),
    ("find", "finds", "found", "found", "finding"),
    ("show", "shows", "showed", "shown", "showing"),
    ("take", "takes", "took", "taken", "taking"),
    ("give", "gives", "gave", "given", "giving"),
    ("choose", "chooses", "chose", "chosen", "choosing"),
    ("hold", "holds", "held", "held", "holding"),
    ("lead", "leads", "led", "led", "leading"),
    ("become", "becomes", "became", "become", "becoming"),
    ("undergo", "undergoes", "underwent", "undergone", "undergoing"),
    ("write", "writes", "wrote", "written", "writing"),
    ("see", "sees", "saw", "seen", "seeing"),
    ("draw", "draws", "drew", "drawn", "drawing"),
    ("seek", "seeks", "sought", "sought", "seeking"),
    ("build", "builds", "built", "built", "building"),
    ("grow", "grows", "grew", "grown", "growing"),
    ("think", "thinks", "thought", "thought", "thinking"),
    ("keep", "keeps", "kept", "kept", "keeping"),
    ("set", "sets", "set", "set", "setting"),
    ("put", "puts", "put", "put", "putting"),
    ("begin", "begins", "began", "begun", "beginning"),
    ("run", "runs", "ran", "run", "running"),
    ("know", "knows", "knew", "known", "knowing"),
    ("tell", "tells", "told", "told", "telling"),
    ("bring", "brings", "brought", "brought", "bringing"),
]
REGULAR = """include use assess diagnose exclude recruit administer screen
interview classify define select determine evaluate identify rate measure
score code report suggest describe estimate propose indicate associate
characterize recognize list introduce revise expand emphasize conceptualize
present follow compare examine confirm establish adopt apply derive complete
require represent reflect support provide consider note argue observe
demonstrate examine analyze base fulfill obtain record remove enroll refer
focus cause add publish sample question criticize replace change review
develop validate translate adapt operationalize specify predict differ
increase reduce remain appear exceed qualify assign categorize document
calculate collect design conduct perform test treat study control explain
investigate link aim intend debate broaden lower retain recommend
interpret guide improve depend rely lack capture distinguish cover train
remove involve limit modify extend prefer permit allow seem contain
receive encourage discuss address relate highlight target""".split()


def vowel(c):
    return c in "aeiou"


def regular_forms(base):
    doubled = {"refer": "referr", "enroll": "enroll", "control": "controll",
               "admit": "admitt", "fulfill": "fulfill"}
    if base.endswith("e"):
        stem_ed = base[:-1]
        ing = base[:-1] + "ing"
    elif base.endswith("y") and not vowel(base[-2]):
        stem_ed = base[:-1] + "i"
        ing = base + "ing"
    elif base in doubled:
        stem_ed = doubled[base]
        ing = doubled[base] + "ing"
    else:
        stem_ed = base
        ing = base + "ing"
    ed = stem_ed + "ed" if not stem_ed.endswith("i") else stem_ed + "ed"
    if base.endswith(("s", "sh", "ch", "x", "z")):
        z = base + "es"
    elif base.endswith("y") and not vowel(base[-2]):
        z = base[:-1] + "ies"
    else:
        z = base + "s"
    return (base, z, ed, ed, ing)


for _b in REGULAR:
    VERBS.append(regular_forms(_b))

TRANSITIVE_OBJECTS = None  # filled below

DET_SG = [("the", "DT"), ("a", "DT"), ("this", "DT"), ("each", "DT"),
          ("its", "PRP$"), ("their", "PRP$"), ("our", "PRP$"),
          ("one", "CD"), ("another", "DT"), ("every", "DT")]
DET_PL = [("the", "DT"), ("these", "DT"), ("those", "DT"), ("all", "DT"),
          ("their", "PRP$"), ("our", "PRP$"), ("some", "DT"),
          ("many", "JJ"), ("several", "JJ"), ("both", "DT"), ("two", "CD"),
          ("three", "CD"), ("most", "JJS"), ("such", "JJ"), ("other", "JJ")]

NOUNS_SG = """diagnosis disorder criterion manual version edition study sample
patient participant clinician interview symptom score scale measure
threshold category classification version revision approach method
procedure assessment protocol framework definition edition checklist
construct condition depression anxiety schizophrenia autism disorder
syndrome episode rate prevalence analysis model validity reliability
change use report review system taxonomy literature field research
treatment trial cohort population group subtype specifier course onset
duration impairment severity outcome inventory questionnaire item
dimension structure purpose context comparison evidence result
association distinction boundary term label concept decade year battery
history injury grief practice agreement number frequency thought caution
presentation publication committee cutoff baseline exclusion bereavement
pathology personality spectrum substance status decision estimate finding
form force task time item point worry rater interviewer table home head
domain theme issue feature problem need goal effect factor level
function risk age sex gender family author editor article chapter text
interval range set criterion""".split()
PLURAL_IRREG = {"diagnosis": "diagnoses", "criterion": "criteria",
                "analysis": "analyses", "syndrome": "syndromes",
                "study": "studies", "taxonomy": "taxonomies",
                "category": "categories", "specifier": "specifiers",
                "inventory": "inventories", "literature": "literatures",
                "research": "researches", "evidence": "evidences",
                "validity": "validities", "reliability": "reliabilities",
                "anxiety": "anxieties", "depression": "depressions",
                "prevalence": "prevalences", "severity": "severities",
                "schizophrenia": "schizophrenias", "autism": "autisms"}
MASS = {"research", "evidence", "literature", "validity", "reliability",
        "anxiety", "depression", "prevalence", "severity",
        "schizophrenia", "autism", "impairment", "onset", "duration",
        "use", "treatment"}


def plural(n):
    if n in PLURAL_IRREG:
        return PLURAL_IRREG[n]
    if n.endswith(("s", "sh", "ch", "x")):
        return n + "es"
    if n.endswith("y") and not vowel(n[-2]):
        return n[:-1] + "ies"
    return n + "s"


COUNT_NOUNS = [n for n in NOUNS_SG if n not in MASS]
PEOPLE_PL = ["participants", "patients", "clinicians", "children",
             "adults", "subjects", "respondents", "raters", "authors",
             "researchers", "investigators", "individuals", "women", "men",
             "veterans", "students", "adolescents", "families",
             "psychiatrists", "interviewers", "controls", "cases"]
ADJ = """diagnostic clinical psychiatric major depressive bipolar general
current previous standard structured psychological mental anxious
social personal significant similar different new older original revised
specific broad narrow categorical dimensional reliable valid common
severe mild moderate chronic acute lifetime primary secondary present
recent early later final additional relevant important useful consistent
empirical conceptual operational formal official recognizable comorbid
obsessive compulsive posttraumatic developmental cognitive behavioral
substantial considerable modest high low persistent psychotic separate
false positive negative excellent full small large stable core intrusive
multiaxial international blind medical total overall possible likely
necessary difficult unclear clear available appropriate adequate
fifth fourth third second first""".split()
VBN_MODS = ["trained", "revised", "proposed", "chosen", "expanded",
            "published", "modified", "established", "diagnosed",
            "affected", "selected", "combined", "reported", "validated"]
ADV = ["also", "previously", "typically", "generally", "further",
       "originally", "subsequently", "currently", "often", "frequently",
       "consistently", "initially", "recently", "first", "still",
       "perhaps", "obviously", "clearly", "largely", "primarily",
       "widely", "commonly", "thus", "therefore", "however", "only",
       "not", "never", "already", "independently", "formally", "strictly"]
NAMES = ["smith", "jones", "kessler", "spitzer", "frances", "regier",
         "first", "williams", "kendler", "wakefield", "cooper", "blashfield",
         "robins", "helzer", "andreasen", "endicott", "feighner", "lee",
         "garcia", "chen", "kim", "nguyen", "mueller", "rossi", "kupfer",
         "widiger", "clark", "krueger", "insel", "hyman", "zimmerman"]
ORGS = [[("american", "NNP"), ("psychiatric", "NNP"), ("association", "NNP")],
        [("apa", "NNP")],
        [("world", "NNP"), ("health", "NNP"), ("organization", "NNP")],
        [("who", "NNP")]]
INSTRUMENTS = [("dsm-iv", "NNP"), ("dsm-5", "NNP"), ("dsm-iii", "NNP"),
               ("dsm-iii-r", "NNP"), ("dsm-iv-tr", "NNP"), ("dsm", "NNP"),
               ("icd-10", "NNP"), ("icd-11", "NNP"), ("scid", "NNP"),
               ("dsm-ii", "NNP")]
PREPS = ["of", "in", "for", "with", "by", "from", "on", "among", "across",
         "during", "after", "before", "within", "between", "under", "into",
         "to", "at", "over", "without", "through", "about", "against"]
SUBORDINATORS = [("because", "IN"), ("although", "IN"), ("though", "IN"),
                 ("if", "IN"), ("when", "WRB"), ("while", "IN"),
                 ("since", "IN"), ("as", "IN"), ("whereas", "IN"),
                 ("unless", "IN"), ("after", "IN"), ("before", "IN")]
MODALS = ["can", "could", "may", "might", "must", "should", "would", "will",
          "cannot"]


class Gen:
    def __init__(self, rng):
        self.r = rng

    def p(self, prob):
        return self.r.random() < prob

    def choice(self, xs):
        return self.r.choice(xs)

    def year(self):
        return (str(self.r.randint(1952, 2024)), "CD")

    def citation(self):
        r = self.r.random()
        out = []
        if r < 0.35:
            out += self.choice(ORGS)
        elif r < 0.6:
            out.append((self.choice(NAMES), "NNP"))
            out += [("et", "FW"), ("al", "FW")]
        elif r < 0.8:
            out += [(self.choice(NAMES), "NNP"), ("and", "CC"),
                    (self.choice(NAMES), "NNP")]
        else:
            out.append((self.choice(NAMES), "NNP"))
        out.append(self.year())
        if self.p(0.15):
            out += [("see", "VB"), ("also", "RB"), (self.choice(NAMES), "NNP"),
                    self.year()]
        return out

    def adjs(self, prob=0.45):
        out = []
        if self.p(0.06):
            out.append((self.choice(VBN_MODS), "VBN"))
        while self.p(prob) and len(out) < 2:
            out.append((self.choice(ADJ), "JJ"))
            prob /= 2
        return out

    def np(self, depth=0, plural_=None, people=False, subject=False):
        if plural_ is None:
            plural_ = self.p(0.55)
        r = self.r.random()
        if r < 0.1:
            return [self.choice(INSTRUMENTS)] + (
                [(self.choice(["criteria", "diagnoses", "categories"]), "NNS")]
                if self.p(0.6) else [])
        if r < 0.13 and subject:
            return [("it", "PRP")] if not plural_ else [("they", "PRP")]
        if r < 0.16 and subject:
            return [("we", "PRP")] if plural_ else [("this", "DT")]
        out = []
        if plural_:
            if self.p(0.6):
                out.append(self.choice(DET_PL))
            out += self.adjs()
            if people or self.p(0.3):
                out.append((self.choice(PEOPLE_PL), "NNS"))
            else:
                if self.p(0.2):
                    out.append((self.choice(COUNT_NOUNS), "NN"))
                out.append((plural(self.choice(COUNT_NOUNS)), "NNS"))
        else:
            noun = self.choice(NOUNS_SG)
            if noun not in MASS or self.p(0.3):
                out.append(self.choice(DET_SG))
            out += self.adjs()
            if self.p(0.15):
                out.append((self.choice(NOUNS_SG), "NN"))
            out.append((noun, "NN"))
        if depth < 1 and self.p(0.3):
            out += self.pp(depth + 1)
        return out

    def pp(self, depth=1):
        prep = self.choice(PREPS)
        tag = "TO" if prep == "to" else "IN"
        return [(prep, tag)] + self.np(depth)

    def verb(self):
        return self.choice(VERBS)

    def finite_vp(self, subject_plural, tense=None):
        v = self.verb()
        tense = tense or self.choice(
            ["past"] * 5 + ["present"] * 3 + ["modal", "perfect", "passive",
                                              "passive", "progressive",
                                              "negated"])
        out = []
        if self.p(0.12):
            out.append((self.choice(ADV), "RB"))
        if tense == "past":
            out.append((v[2], "VBD"))
        elif tense == "present":
            out.append((v[0], "VBP") if subject_plural else (v[1], "VBZ"))
        elif tense == "modal":
            out.append((self.choice(MODALS), "MD"))
            if self.p(0.2):
                out.append(("not", "RB"))
            if self.p(0.3):
                out += [("be", "VB"), (v[3], "VBN")]
                return out + self.passive_tail()
            out.append((v[0], "VB"))
        elif tense == "perfect":
            aux = self.choice([("had", "VBD"), ("have", "VBP")
                               if subject_plural else ("has", "VBZ")])
            out.append(aux)
            if self.p(0.3):
                out += [("been", "VBN"), (v[3], "VBN")]
                return out + self.passive_tail()
            out.append((v[3], "VBN"))
        elif tense == "passive":
            if subject_plural:
                out.append(self.choice([("were", "VBD"), ("are", "VBP")]))
            else:
                out.append(self.choice([("was", "VBD"), ("is", "VBZ")]))
            if self.p(0.2):
                out.append((self.choice(ADV), "RB"))
            out.append((v[3], "VBN"))
            return out + self.passive_tail()
        elif tense == "progressive":
            out.append(("are", "VBP") if subject_plural else ("is", "VBZ"))
            out.append((v[4], "VBG"))
        else:
            if subject_plural:
                out.append(self.choice([("did", "VBD"), ("do", "VBP")]))
            else:
                out.append(self.choice([("did", "VBD"), ("does", "VBZ")]))
            out += [("not", "RB"), (v[0], "VB")]
        return out + self.object_tail()

    def passive_tail(self):
        out = []
        r = self.r.random()
        if r < 0.3:
            out += [("by", "IN")] + self.np(1)
        elif r < 0.5:
            out += [("according", "VBG"), ("to", "TO")] + self.np(1)
        elif r < 0.7:
            out += [("using", "VBG")] + self.np(1)
        elif r < 0.8:
            out += [("as", "IN")] + self.np(1)
        if self.p(0.3):
            out += self.pp()
        return out

    def object_tail(self):
        out = self.np(0)
        r = self.r.random()
        if r < 0.15:
            out += [("using", "VBG")] + self.np(1)
        elif r < 0.25:
            out += [("based", "VBN"), ("on", "IN")] + self.np(1)
        elif r < 0.35:
            out += [("to", "TO"), (self.verb()[0], "VB")] + self.np(1)
        elif r < 0.55:
            out += self.pp()
        elif r < 0.62:
            out += [("as", "IN"), ("well", "RB"), ("as", "IN")] + self.np(1)
        return out

    def subject(self):
        plural_ = self.p(0.6)
        people = plural_ and self.p(0.5)
        return self.np(0, plural_, people, subject=True), plural_

    def clause(self, tense=None):
        subj, pl = self.subject()
        if subj and subj[0] in (("it", "PRP"), ("this", "DT")):
            pl = False
        if subj and subj[0] in (("we", "PRP"), ("they", "PRP")):
            pl = True
        return subj + self.finite_vp(pl, tense)

    def cite_tail(self):
        return self.citation() if self.p(0.6) else []

    def sentence(self):
        r = self.r.random()
        out = []
        if r < 0.30:
            if self.p(0.15):
                out.append((self.choice(["however", "thus", "therefore",
                                         "moreover", "furthermore",
                                         "unfortunately", "importantly",
                                         "notably", "similarly"]), "RB"))
            out += self.clause() + self.cite_tail()
        elif r < 0.42:
            sub, tag = self.choice(SUBORDINATORS)
            out += [(sub, tag)] + self.clause() + self.clause() + \
                self.cite_tail()
        elif r < 0.52:
            out += self.clause() + self.cite_tail() + [("which", "WDT")]
            out += self.finite_vp(self.p(0.5))
        elif r < 0.60:
            subj = [(self.choice(PEOPLE_PL), "NNS")]
            if self.p(0.5):
                subj = [self.choice(DET_PL)] + subj
            out += subj + [("who", "WP")] + self.finite_vp(True, "past")
            out += self.finite_vp(True) + self.cite_tail()
        elif r < 0.68:
            subj, pl = self.subject()
            verb = self.choice(["suggest", "show", "report", "argue",
                                "note", "indicate", "find", "propose",
                                "demonstrate", "observe", "confirm"])
            forms = next(v for v in VERBS if v[0] == verb)
            if self.p(0.6):
                out += subj + [(forms[2], "VBD")]
            else:
                out += subj + [(forms[0], "VBP") if pl else (forms[1], "VBZ")]
            out += [("that", "IN")] + self.clause() + self.cite_tail()
        elif r < 0.74:
            lead = self.choice([
                [("according", "VBG"), ("to", "TO")],
                [("consistent", "JJ"), ("with", "IN")],
                [("in", "IN"), ("line", "NN"), ("with", "IN")],
                [("following", "VBG")], [("as", "IN"), ("in", "IN")],
                [("based", "VBN"), ("on", "IN")],
                [("in", "IN"), ("accordance", "NN"), ("with", "IN")]])
            out += lead + self.np(1) + self.cite_tail() + self.clause()
        elif r < 0.79:
            v = self.verb()
            out += [("to", "TO"), (v[0], "VB")] + self.np(1) + self.clause()
        elif r < 0.83:
            be = self.choice([("is", "VBZ"), ("was", "VBD"), ("are", "VBP"),
                              ("were", "VBD")])
            out += [("there", "EX"), be] + self.np(0) + self.cite_tail()
        elif r < 0.87:
            out += [("it", "PRP"), self.choice([("is", "VBZ"), ("was", "VBD")]),
                    (self.choice(["important", "possible", "necessary",
                                  "difficult", "unclear", "likely"]), "JJ")]
            if self.p(0.5):
                out += [("to", "TO"), (self.choice(["note", "consider",
                                                    "recognize"]), "VB"),
                        ("that", "IN")] + self.clause()
            else:
                out += [("that", "IN")] + self.clause()
        elif r < 0.91:
            out += self.clause("past") + [("and", "CC")] + \
                self.finite_vp(True, "past") + self.cite_tail()
        elif r < 0.95:
            subj, pl = self.subject()
            out += subj + self.finite_vp(pl, "passive") + \
                [("because", "IN")] + self.clause() + self.cite_tail()
        elif r < 0.965:
            subj, pl = self.subject()
            out += subj + [(self.choice(VERBS)[2], "VBD"),
                           (self.choice(["how", "why", "when", "where"]), "WRB")]
            out += self.clause()
        elif r < 0.975:
            subj, pl = self.subject()
            v = self.verb()
            out += subj + [(v[0], "VBP") if pl else (v[1], "VBZ")]
            out += [("at", "IN"), ("least", "JJS"),
                                                   (self.choice(["two", "five",
                                                                 "three"]), "CD"),
                                                   ("of", "IN")] + self.np(1, True)
        else:
            out += self.clause() + [("whereas", "IN")] + self.clause()
        return [(w.lower(), t) for w, t in out if w]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20260)
    ap.add_argument("--sentences", type=int, default=6000)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    g = Gen(random.Random(args.seed))
    with open(args.out, "w") as f:
        f.write("# Generated by tools/make_tagger_corpus.py --seed %d "
                "--sentences %d\n" % (args.seed, args.sentences))
        for _ in range(args.sentences):
            f.write(" ".join("%s/%s" % p for p in g.sentence()) + "\n")


if __name__ == "__main__":
    main()
