"""Embedded word tables for the paraphrase-perturbation engine.

Versioned in-repo so attacks are reproducible: a ~500-entry synonym map,
~40 contraction pairs, and ~25 filler phrases. All keys lowercase; the
engine handles capitalization.
"""

SYNONYMS = {
    # adjectives / qualities
    "quick": "fast", "rapid": "swift", "slow": "sluggish", "big": "large",
    "huge": "enormous", "enormous": "immense", "small": "little",
    "tiny": "minuscule", "good": "fine", "great": "excellent",
    "excellent": "outstanding", "bad": "poor", "terrible": "awful",
    "awful": "dreadful", "happy": "glad", "glad": "pleased",
    "sad": "unhappy", "angry": "furious", "furious": "irate",
    "beautiful": "lovely", "lovely": "charming", "ugly": "unsightly",
    "smart": "clever", "clever": "shrewd", "intelligent": "bright",
    "stupid": "foolish", "foolish": "silly", "strong": "powerful",
    "powerful": "mighty", "weak": "feeble", "hard": "difficult",
    "difficult": "tough", "easy": "simple", "simple": "straightforward",
    "new": "recent", "recent": "fresh", "old": "ancient",
    "ancient": "archaic", "young": "youthful", "important": "significant",
    "significant": "notable", "notable": "remarkable",
    "remarkable": "striking", "interesting": "intriguing",
    "boring": "tedious", "tedious": "dull", "dull": "drab",
    "bright": "brilliant", "brilliant": "radiant", "dark": "dim",
    "dim": "gloomy", "loud": "noisy", "noisy": "raucous",
    "quiet": "silent", "silent": "hushed", "clean": "spotless",
    "dirty": "filthy", "filthy": "grimy", "rich": "wealthy",
    "wealthy": "affluent", "poor": "impoverished", "cheap": "inexpensive",
    "expensive": "costly", "costly": "pricey", "fast": "speedy",
    "cold": "chilly", "chilly": "frigid", "hot": "scorching",
    "warm": "balmy", "wet": "damp", "damp": "moist", "dry": "arid",
    "empty": "vacant", "vacant": "unoccupied", "full": "packed",
    "busy": "occupied", "calm": "tranquil", "tranquil": "serene",
    "nervous": "anxious", "anxious": "uneasy", "brave": "courageous",
    "courageous": "valiant", "afraid": "frightened",
    "frightened": "scared", "scared": "terrified", "tired": "weary",
    "weary": "fatigued", "strange": "odd", "odd": "peculiar",
    "peculiar": "curious", "common": "ordinary", "ordinary": "typical",
    "typical": "usual", "rare": "scarce", "scarce": "uncommon",
    "famous": "renowned", "renowned": "celebrated", "unknown": "obscure",
    "obscure": "unfamiliar", "true": "accurate", "accurate": "precise",
    "precise": "exact", "false": "untrue", "wrong": "incorrect",
    "incorrect": "erroneous", "right": "correct", "correct": "proper",
    "whole": "entire", "entire": "complete", "complete": "total",
    "partial": "incomplete", "main": "principal", "principal": "chief",
    "chief": "primary", "primary": "foremost", "final": "last",
    "last": "ultimate", "first": "initial", "initial": "earliest",
    "early": "premature", "late": "tardy", "near": "close",
    "close": "nearby", "far": "distant", "distant": "remote",
    "remote": "faraway", "wide": "broad", "broad": "expansive",
    "narrow": "slim", "thick": "dense", "dense": "compact",
    "thin": "slender", "slender": "slim", "heavy": "weighty",
    "light": "lightweight", "deep": "profound", "profound": "deep",
    "shallow": "superficial", "high": "tall", "tall": "lofty",
    "low": "shallow", "long": "lengthy", "lengthy": "extended",
    "short": "brief", "brief": "concise", "concise": "succinct",
    "sharp": "keen", "keen": "acute", "blunt": "dull",
    "smooth": "sleek", "rough": "coarse", "coarse": "gritty",
    "soft": "gentle", "gentle": "mild", "mild": "moderate",
    "severe": "harsh", "harsh": "stern", "strict": "rigorous",
    "rigorous": "stringent", "loose": "slack", "tight": "snug",
    "safe": "secure", "secure": "protected", "dangerous": "hazardous",
    "hazardous": "perilous", "healthy": "fit", "sick": "ill",
    "ill": "unwell", "dead": "deceased", "alive": "living",
    "happy-go-lucky": "carefree", "honest": "truthful",
    "truthful": "candid", "dishonest": "deceitful", "kind": "considerate",
    "considerate": "thoughtful", "cruel": "brutal", "brutal": "vicious",
    "polite": "courteous", "courteous": "civil", "rude": "impolite",
    "friendly": "amiable", "amiable": "genial", "hostile": "antagonistic",
    "eager": "keen", "reluctant": "hesitant", "hesitant": "unsure",
    "certain": "sure", "sure": "confident", "confident": "assured",
    "doubtful": "dubious", "dubious": "questionable",
    "possible": "feasible", "feasible": "viable", "impossible": "unattainable",
    "likely": "probable", "probable": "plausible", "unlikely": "improbable",
    "necessary": "essential", "essential": "vital", "vital": "crucial",
    "crucial": "critical", "critical": "pivotal", "useful": "handy",
    "handy": "convenient", "useless": "worthless", "valuable": "precious",
    "precious": "prized", "worthless": "valueless",
    # verbs
    "say": "state", "said": "stated", "says": "states", "tell": "inform",
    "told": "informed", "ask": "inquire", "asked": "inquired",
    "answer": "reply", "answered": "replied", "speak": "talk",
    "spoke": "talked", "shout": "yell", "shouted": "yelled",
    "whisper": "murmur", "whispered": "murmured", "walk": "stroll",
    "walked": "strolled", "run": "sprint", "ran": "sprinted",
    "jump": "leap", "jumped": "leaped", "fall": "tumble",
    "fell": "tumbled", "rise": "ascend", "rose": "ascended",
    "climb": "scale", "climbed": "scaled", "move": "shift",
    "moved": "shifted", "stop": "halt", "stopped": "halted",
    "start": "begin", "started": "began", "begin": "commence",
    "began": "commenced", "end": "finish", "ended": "finished",
    "finish": "conclude", "finished": "concluded", "make": "create",
    "made": "created", "build": "construct", "built": "constructed",
    "destroy": "demolish", "destroyed": "demolished", "break": "shatter",
    "broke": "shattered", "fix": "repair", "fixed": "repaired",
    "change": "alter", "changed": "altered", "improve": "enhance",
    "improved": "enhanced", "reduce": "decrease", "reduced": "decreased",
    "increase": "raise", "increased": "raised", "grow": "expand",
    "grew": "expanded", "shrink": "contract", "shrank": "contracted",
    "show": "display", "showed": "displayed", "hide": "conceal",
    "hid": "concealed", "find": "locate", "found": "located",
    "lose": "misplace", "lost": "misplaced", "get": "obtain",
    "got": "obtained", "give": "provide", "gave": "provided",
    "take": "grab", "took": "grabbed", "keep": "retain",
    "kept": "retained", "hold": "grasp", "held": "grasped",
    "send": "dispatch", "sent": "dispatched", "receive": "accept",
    "received": "accepted", "buy": "purchase", "bought": "purchased",
    "sell": "vend", "sold": "vended", "pay": "remit", "paid": "remitted",
    "spend": "expend", "spent": "expended", "save": "conserve",
    "saved": "conserved", "use": "employ", "used": "employed",
    "need": "require", "needed": "required", "want": "desire",
    "wanted": "desired", "like": "enjoy", "liked": "enjoyed",
    "love": "adore", "loved": "adored", "hate": "despise",
    "hated": "despised", "help": "assist", "helped": "assisted",
    "hurt": "harm", "harmed": "injured", "think": "believe",
    "thought": "believed", "know": "understand", "knew": "understood",
    "learn": "discover", "learned": "discovered", "teach": "instruct",
    "taught": "instructed", "remember": "recall", "remembered": "recalled",
    "forget": "overlook", "forgot": "overlooked", "decide": "determine",
    "decided": "determined", "choose": "select", "chose": "selected",
    "try": "attempt", "tried": "attempted", "succeed": "prevail",
    "succeeded": "prevailed", "fail": "falter", "failed": "faltered",
    "win": "triumph", "won": "triumphed", "allow": "permit",
    "allowed": "permitted", "forbid": "prohibit", "forbade": "prohibited",
    "follow": "pursue", "followed": "pursued", "lead": "guide",
    "led": "guided", "watch": "observe", "watched": "observed",
    "see": "notice", "saw": "noticed", "look": "glance",
    "looked": "glanced", "hear": "listen", "heard": "listened",
    "feel": "sense", "felt": "sensed", "touch": "contact",
    "touched": "contacted", "eat": "consume", "ate": "consumed",
    "drink": "sip", "drank": "sipped", "sleep": "slumber",
    "slept": "slumbered", "wake": "awaken", "woke": "awakened",
    "live": "reside", "lived": "resided", "stay": "remain",
    "stayed": "remained", "leave": "depart", "left": "departed",
    "arrive": "appear", "arrived": "appeared", "return": "come back",
    "returned": "came back", "travel": "journey", "traveled": "journeyed",
    "visit": "call on", "visited": "called on", "meet": "encounter",
    "met": "encountered", "join": "unite", "joined": "united",
    "separate": "divide", "separated": "divided", "gather": "collect",
    "gathered": "collected", "spread": "scatter", "carry": "transport",
    "carried": "transported", "push": "shove", "pushed": "shoved",
    "pull": "tug", "pulled": "tugged", "throw": "toss",
    "threw": "tossed", "catch": "seize", "caught": "seized",
    "open": "unlock", "opened": "unlocked", "shut": "seal",
    "write": "compose", "wrote": "composed", "read": "peruse",
    "draw": "sketch", "drew": "sketched", "paint": "depict",
    "painted": "depicted", "sing": "chant", "sang": "chanted",
    "dance": "sway", "danced": "swayed", "play": "perform",
    "played": "performed", "work": "labor", "worked": "labored",
    "rest": "relax", "rested": "relaxed", "wait": "linger",
    "waited": "lingered", "hurry": "rush", "hurried": "rushed",
    "begin-again": "restart", "continue": "proceed",
    "continued": "proceeded", "explain": "clarify",
    "explained": "clarified", "describe": "portray",
    "described": "portrayed", "discuss": "debate", "discussed": "debated",
    "argue": "dispute", "argued": "disputed", "agree": "concur",
    "agreed": "concurred", "disagree": "differ", "disagreed": "differed",
    "suggest": "propose", "suggested": "proposed", "demand": "insist",
    "demanded": "insisted", "promise": "pledge", "promised": "pledged",
    "refuse": "decline", "refused": "declined", "accept": "embrace",
    "examine": "inspect", "examined": "inspected", "check": "verify",
    "checked": "verified", "test": "evaluate", "tested": "evaluated",
    "measure": "gauge", "measured": "gauged", "compare": "contrast",
    "compared": "contrasted", "analyze": "study", "analyzed": "studied",
    "create": "produce", "produced": "generated", "develop": "evolve",
    "developed": "evolved", "design": "devise", "designed": "devised",
    "plan": "arrange", "planned": "arranged", "organize": "arrange",
    "organized": "arranged", "manage": "oversee", "managed": "oversaw",
    "control": "regulate", "controlled": "regulated",
    "protect": "safeguard", "protected": "safeguarded",
    "attack": "assault", "attacked": "assaulted", "defend": "shield",
    "defended": "shielded", "fight": "battle", "fought": "battled",
    # nouns
    "house": "home", "home": "residence", "building": "structure",
    "structure": "edifice", "room": "chamber", "door": "entrance",
    "window": "pane", "street": "road", "road": "route",
    "route": "path", "path": "trail", "city": "town",
    "town": "municipality", "country": "nation", "nation": "state",
    "world": "globe", "earth": "planet", "place": "location",
    "location": "spot", "area": "region", "region": "zone",
    "zone": "sector", "part": "portion", "portion": "segment",
    "piece": "fragment", "fragment": "shard", "whole-thing": "entirety",
    "thing": "object", "object": "item", "item": "article",
    "stuff": "material", "material": "substance", "substance": "matter",
    "person": "individual", "people": "folks", "man": "gentleman",
    "woman": "lady", "child": "youngster", "children": "youngsters",
    "boy": "lad", "girl": "lass", "friend": "companion",
    "companion": "associate", "enemy": "foe", "foe": "adversary",
    "leader": "head", "worker": "employee", "employee": "staffer",
    "teacher": "instructor", "instructor": "educator",
    "student": "pupil", "pupil": "learner", "doctor": "physician",
    "job": "occupation", "occupation": "profession",
    "profession": "career", "career": "vocation", "task": "assignment",
    "assignment": "duty", "duty": "obligation", "goal": "objective",
    "objective": "aim", "aim": "target", "target": "mark",
    "purpose": "intent", "intent": "intention", "reason": "cause",
    "cause": "motive", "result": "outcome", "outcome": "consequence",
    "consequence": "effect", "effect": "impact", "impact": "influence",
    "problem": "issue", "issue": "matter", "trouble": "difficulty",
    "difficulty": "obstacle", "obstacle": "hurdle", "hurdle": "barrier",
    "solution": "answer", "method": "approach", "approach": "technique",
    "technique": "procedure", "procedure": "process",
    "process": "operation", "way": "manner", "manner": "fashion",
    "idea": "notion", "notion": "concept", "concept": "thought",
    "opinion": "view", "view": "perspective", "perspective": "outlook",
    "belief": "conviction", "conviction": "certainty", "fact": "truth",
    "truth": "reality", "reality": "actuality", "story": "tale",
    "tale": "narrative", "narrative": "account", "account": "report",
    "report": "record", "record": "document", "document": "file",
    "book": "volume", "volume": "tome", "page": "sheet",
    "word": "term", "term": "expression", "expression": "phrase",
    "phrase": "wording", "sentence": "statement",
    "statement": "declaration", "question": "query", "query": "inquiry",
    "inquiry": "investigation", "answer-noun": "response",
    "response": "reply", "message": "communication", "letter": "note",
    "note": "memo", "news": "tidings", "information": "data",
    "data": "figures", "knowledge": "understanding", "money": "funds",
    "funds": "capital", "cash": "currency", "price": "cost",
    "cost": "expense", "expense": "expenditure", "value": "worth",
    "worth": "merit", "profit": "gain", "gain": "benefit",
    "benefit": "advantage", "advantage": "edge", "loss": "deficit",
    "time": "period", "period": "era", "era": "epoch",
    "moment": "instant", "instant": "second", "day": "date",
    "year": "annum", "century": "hundred years", "beginning": "start",
    "middle": "midpoint", "ending": "conclusion",
    "conclusion": "finale", "amount": "quantity", "quantity": "measure",
    "number": "figure", "figure": "digit", "size": "magnitude",
    "magnitude": "scale", "level": "degree", "degree": "extent",
    "extent": "scope", "scope": "range", "range": "span",
    "limit": "boundary", "boundary": "border", "border": "edge",
    "edge": "rim", "center": "core", "core": "heart",
    "top": "summit", "summit": "peak", "peak": "apex",
    "bottom": "base", "base": "foundation", "foundation": "groundwork",
    "side": "flank", "front": "fore", "back": "rear",
    "power": "strength", "strength": "force", "force": "might",
    "energy": "vigor", "vigor": "vitality", "speed": "velocity",
    "velocity": "pace", "pace": "tempo", "weight": "mass",
    "pressure": "stress", "stress": "strain", "heat": "warmth",
    "warmth": "glow", "light-noun": "illumination", "sound": "noise",
    "noise": "din", "voice": "tone", "color": "hue", "hue": "shade",
    "shape": "form", "form": "configuration", "pattern": "design",
    "picture": "image", "image": "illustration", "example": "instance",
    "instance": "case", "case": "situation", "situation": "circumstance",
    "circumstance": "condition", "condition": "state",
    "event": "occurrence", "occurrence": "incident",
    "incident": "episode", "episode": "affair", "chance": "opportunity",
    "opportunity": "opening", "risk": "hazard", "hazard": "danger",
    "danger": "peril", "peril": "threat", "threat": "menace",
    "fear": "dread", "dread": "terror", "hope": "aspiration",
    "aspiration": "ambition", "dream": "vision", "wish": "desire",
    "joy": "delight", "delight": "pleasure", "pleasure": "enjoyment",
    "sorrow": "grief", "grief": "anguish", "pain": "ache",
    "ache": "discomfort", "anger": "rage", "rage": "fury",
    "surprise": "astonishment", "astonishment": "amazement",
    # adverbs / connectives
    "very": "extremely", "extremely": "exceedingly", "quite": "rather",
    "rather": "fairly", "really": "truly", "truly": "genuinely",
    "almost": "nearly", "nearly": "virtually", "often": "frequently",
    "frequently": "regularly", "rarely": "seldom", "seldom": "infrequently",
    "always": "invariably", "never": "at no time", "sometimes": "occasionally",
    "occasionally": "periodically", "usually": "generally",
    "generally": "typically", "quickly": "rapidly", "rapidly": "swiftly",
    "slowly": "gradually", "gradually": "steadily", "suddenly": "abruptly",
    "abruptly": "unexpectedly", "immediately": "instantly",
    "instantly": "at once", "eventually": "ultimately",
    "ultimately": "finally", "finally": "lastly", "firstly": "initially",
    "also": "additionally", "additionally": "furthermore",
    "furthermore": "moreover", "moreover": "besides",
    "however": "nevertheless", "nevertheless": "nonetheless",
    "therefore": "consequently", "consequently": "accordingly",
    "thus": "hence", "hence": "thereby", "perhaps": "possibly",
    "possibly": "conceivably", "probably": "presumably",
    "certainly": "undoubtedly", "undoubtedly": "unquestionably",
    "clearly": "evidently", "evidently": "plainly",
    "especially": "particularly", "particularly": "notably",
    "mainly": "chiefly", "chiefly": "primarily", "mostly": "largely",
    "largely": "predominantly", "completely": "entirely",
    "entirely": "wholly", "wholly": "fully", "partly": "partially",
    "partially": "somewhat", "somewhat": "slightly",
    "together": "jointly", "jointly": "collectively", "alone": "solely",
    "solely": "exclusively", "everywhere": "all over",
    "nowhere": "in no place", "anywhere": "wherever",
}

CONTRACTIONS = {
    "aren't": "are not", "can't": "cannot", "couldn't": "could not",
    "didn't": "did not", "doesn't": "does not", "don't": "do not",
    "hadn't": "had not", "hasn't": "has not", "haven't": "have not",
    "he'd": "he would", "he'll": "he will", "he's": "he is",
    "i'd": "i would", "i'll": "i will", "i'm": "i am", "i've": "i have",
    "isn't": "is not", "it'd": "it would", "it'll": "it will",
    "it's": "it is", "let's": "let us", "mightn't": "might not",
    "mustn't": "must not", "shan't": "shall not", "she'd": "she would",
    "she'll": "she will", "she's": "she is", "shouldn't": "should not",
    "that's": "that is", "there's": "there is", "they'd": "they would",
    "they'll": "they will", "they're": "they are", "they've": "they have",
    "wasn't": "was not", "we'd": "we would", "we're": "we are",
    "we've": "we have", "weren't": "were not", "what's": "what is",
    "won't": "will not", "wouldn't": "would not", "you'd": "you would",
    "you'll": "you will", "you're": "you are", "you've": "you have",
}

FILLER_PHRASES = [
    "as a matter of fact",
    "at the end of the day",
    "needless to say",
    "in other words",
    "for all intents and purposes",
    "to tell the truth",
    "as it turns out",
    "it goes without saying that",
    "when all is said and done",
    "all things considered",
    "in the grand scheme of things",
    "for the most part",
    "truth be told",
    "to be honest",
    "in point of fact",
    "it is worth noting that",
    "it should be noted that",
    "as previously mentioned",
    "as mentioned earlier",
    "in a manner of speaking",
    "so to speak",
    "more often than not",
    "at this point in time",
    "in this day and age",
    "first and foremost",
    "last but not least",
]
