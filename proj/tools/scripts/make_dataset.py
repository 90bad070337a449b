# Copyright 2026 The Lemotif Authors
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

"""Writes the synthetic labelled dataset used by the eval fixtures.

    python3 tools/scripts/make_dataset.py tests/fixtures/dataset_60.json
"""

import json
import random
import sys

TOPIC_LINES = {
    "exercise": ["went for a run around the park", "long workout at the gym", "yoga class after lunch",
                 "swimming laps at the pool"],
    "family": ["called my mom and dad", "my sister visited with her kids", "dinner at my parents place",
               "helped my grandpa with his garden"],
    "food": ["cooked pasta for dinner", "tried a new sushi restaurant", "baked cookies all afternoon",
             "grabbed a burger for lunch"],
    "friends": ["hung out with friends downtown", "my best friend came over", "group chat with my roommates",
                "caught up with an old buddy"],
    "god": ["went to church in the morning", "spent time in prayer", "read the bible before bed",
            "worship at the temple"],
    "health": ["doctor appointment about my headache", "stayed home sick with the flu",
               "therapy session this afternoon", "dentist checkup"],
    "love": ["date night with my girlfriend", "anniversary dinner with my husband",
             "my boyfriend surprised me at work", "long walk with my partner"],
    "recreation": ["watched a movie on netflix", "went to a concert", "played video games all evening",
                   "spent the day at the beach"],
    "school": ["studied for the midterm", "long lecture and homework after", "turned in my essay",
               "exam in chemistry class"],
    "sleep": ["slept in until noon", "barely slept last night", "took a long nap", "woke up at 4am again"],
    "work": ["meeting with my boss", "long shift at the office", "presentation for a client",
             "overtime to finish the report"],
}

EMOTION_WORDS = {
    "afraid": ["scared", "terrified"],
    "angry": ["angry", "furious"],
    "anxious": ["anxious", "nervous"],
    "ashamed": ["ashamed", "embarrassed"],
    "awkward": ["awkward", "uncomfortable"],
    "bored": ["bored", "tedious"],
    "calm": ["calm", "peaceful"],
    "confused": ["confused", "puzzled"],
    "disgusted": ["disgusted", "gross"],
    "excited": ["excited", "thrilled"],
    "frustrated": ["frustrated", "annoyed"],
    "happy": ["happy", "cheerful"],
    "jealous": ["jealous", "envious"],
    "nostalgic": ["nostalgic", "memories"],
    "proud": ["proud", "accomplished"],
    "sad": ["sad", "lonely"],
    "satisfied": ["satisfied", "fulfilled"],
    "surprised": ["surprised", "shocked"],
}

FILLER = ["honestly", "today", "for a while", "kind of", "i guess", "overall"]


def sub_entry(rng):
    topic = rng.choice(sorted(TOPIC_LINES))
    emotions = rng.sample(sorted(EMOTION_WORDS), rng.choice([1, 1, 2, 2, 3]))
    feel = " and ".join(rng.choice(EMOTION_WORDS[e]) for e in emotions)
    text = f"{rng.choice(TOPIC_LINES[topic])}, {rng.choice(FILLER)} i felt {feel}."
    return {"text": text[0].upper() + text[1:], "topics": [topic], "emotions": sorted(emotions)}


def main(argv):
    rng = random.Random(20)
    entries = [{"id": f"day-{i:02d}", "sub_entries": [sub_entry(rng) for _ in range(3)]} for i in range(20)]
    with open(argv[1], "w") as f:
        json.dump({"entries": entries}, f, indent=2)
        f.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
