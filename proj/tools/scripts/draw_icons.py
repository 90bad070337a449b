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

"""Draws the bundled topic icons: black silhouettes on white, 256x256 PNG.

These are simple synthetic placeholders. Regenerate with

    python3 tools/scripts/draw_icons.py core/data/icons
"""

import math
import sys
from pathlib import Path

from PIL import Image, ImageDraw

SIZE = 256
INK = 0
BLANK = 255


def canvas():
    img = Image.new("L", (SIZE, SIZE), BLANK)
    return img, ImageDraw.Draw(img)


def exercise():
    img, d = canvas()
    d.ellipse((78, 70, 178, 120), outline=INK, width=22)  # handle ring
    d.polygon([(80, 95), (176, 95), (200, 140), (56, 140)], fill=INK)  # shoulder
    d.ellipse((48, 92, 208, 232), fill=INK)
    return img



def family():
    img, d = canvas()
    d.polygon([(128, 30), (228, 120), (28, 120)], fill=INK)
    d.rectangle((52, 118, 204, 226), fill=INK)
    d.rectangle((112, 150, 144, 200), fill=BLANK)  # window
    return img



def food():
    img, d = canvas()
    d.ellipse((40, 70, 136, 226), fill=INK)
    d.ellipse((120, 70, 216, 226), fill=INK)
    d.rectangle((88, 70, 168, 130), fill=INK)
    d.rectangle((122, 34, 136, 96), fill=INK)  # stem
    return img



def friends():
    img, d = canvas()
    for cx in (88, 168):
        d.ellipse((cx - 34, 40, cx + 34, 108), fill=INK)
        d.polygon([(cx - 34, 74), (cx + 34, 74), (cx + 62, 206), (cx - 62, 206)], fill=INK)
        d.pieslice((cx - 62, 112, cx + 62, 300), 180, 360, fill=INK)
    d.rectangle((88, 50, 168, 120), fill=INK)
    d.rectangle((26, 200, 230, 214), fill=INK)
    return img



def god():
    img, d = canvas()
    d.rectangle((108, 24, 148, 232), fill=INK)
    d.rectangle((58, 72, 198, 112), fill=INK)
    return img


def health():
    img, d = canvas()
    d.rounded_rectangle((36, 36, 220, 220), radius=28, fill=INK)
    d.rectangle((110, 66, 146, 190), fill=BLANK)
    d.rectangle((66, 110, 190, 146), fill=BLANK)
    return img


def love():
    img, d = canvas()
    r = 56
    for cx in (128 - 0.5 * r * 1.6, 128 + 0.5 * r * 1.6):
        d.ellipse((cx - r, 60, cx + r, 60 + 2 * r), fill=INK)
    d.polygon([(36, 120), (220, 120), (128, 228)], fill=INK)
    return img


def recreation():
    img, d = canvas()
    d.polygon([(124, 28), (124, 184), (32, 184)], fill=INK)  # main sail
    d.polygon([(136, 50), (136, 184), (208, 184)], fill=INK)  # jib
    d.polygon([(28, 182), (228, 182), (196, 226), (60, 226)], fill=INK)  # hull
    d.rectangle((124, 28, 136, 184), fill=INK)  # mast
    return img



def school():
    img, d = canvas()
    d.polygon([(24, 64), (128, 84), (232, 64), (232, 200), (128, 220), (24, 200)], fill=INK)
    d.line([(128, 92), (128, 212)], fill=BLANK, width=4)
    return img


def sleep():
    img, d = canvas()
    d.ellipse((32, 32, 224, 224), fill=INK)
    d.ellipse((92, 4, 260, 172), fill=BLANK)  # bite toward the upper right
    return img


def work():
    img, d = canvas()
    d.rounded_rectangle((96, 44, 160, 96), radius=12, outline=INK, width=14)
    d.rounded_rectangle((28, 84, 228, 216), radius=16, fill=INK)
    return img


ICONS = {
    "exercise": exercise,
    "family": family,
    "food": food,
    "friends": friends,
    "god": god,
    "health": health,
    "love": love,
    "recreation": recreation,
    "school": school,
    "sleep": sleep,
    "work": work,
}


def main(argv):
    out = Path(argv[1] if len(argv) > 1 else "core/data/icons")
    out.mkdir(parents=True, exist_ok=True)
    for name, draw in ICONS.items():
        draw().save(out / f"{name}.png", optimize=True)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
