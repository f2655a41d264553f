// Generated by scripts/embed_data.py from data/emoji_names.tsv; do not edit.
#include "demoji/emoji_name_data.hpp"

namespace demoji::emoji {

const EmojiNameRow k_emoji_name_rows[] = {
    {{0x1F600, 0, 0, 0, 0, 0, 0, 0}, "grinning"},
    {{0x1F601, 0, 0, 0, 0, 0, 0, 0}, "grin"},
    {{0x1F602, 0, 0, 0, 0, 0, 0, 0}, "joy"},
    {{0x1F603, 0, 0, 0, 0, 0, 0, 0}, "smiley"},
    {{0x1F604, 0, 0, 0, 0, 0, 0, 0}, "smile"},
    {{0x1F605, 0, 0, 0, 0, 0, 0, 0}, "sweat_smile"},
    {{0x1F606, 0, 0, 0, 0, 0, 0, 0}, "satisfied"},
    {{0x1F607, 0, 0, 0, 0, 0, 0, 0}, "innocent"},
    {{0x1F608, 0, 0, 0, 0, 0, 0, 0}, "smiling_imp"},
    {{0x1F609, 0, 0, 0, 0, 0, 0, 0}, "wink"},
    {{0x1F60A, 0, 0, 0, 0, 0, 0, 0}, "blush"},
    {{0x1F60B, 0, 0, 0, 0, 0, 0, 0}, "yum"},
    {{0x1F60C, 0, 0, 0, 0, 0, 0, 0}, "relieved"},
    {{0x1F60D, 0, 0, 0, 0, 0, 0, 0}, "heart_eyes"},
    {{0x1F60E, 0, 0, 0, 0, 0, 0, 0}, "sunglasses"},
    {{0x1F60F, 0, 0, 0, 0, 0, 0, 0}, "smirk"},
    {{0x1F610, 0, 0, 0, 0, 0, 0, 0}, "neutral_face"},
    {{0x1F611, 0, 0, 0, 0, 0, 0, 0}, "expressionless"},
    {{0x1F612, 0, 0, 0, 0, 0, 0, 0}, "unamused"},
    {{0x1F613, 0, 0, 0, 0, 0, 0, 0}, "sweat"},
    {{0x1F614, 0, 0, 0, 0, 0, 0, 0}, "pensive"},
    {{0x1F615, 0, 0, 0, 0, 0, 0, 0}, "confused"},
    {{0x1F616, 0, 0, 0, 0, 0, 0, 0}, "confounded"},
    {{0x1F617, 0, 0, 0, 0, 0, 0, 0}, "kissing"},
    {{0x1F618, 0, 0, 0, 0, 0, 0, 0}, "kissing_heart"},
    {{0x1F619, 0, 0, 0, 0, 0, 0, 0}, "kissing_smiling_eyes"},
    {{0x1F61A, 0, 0, 0, 0, 0, 0, 0}, "kissing_closed_eyes"},
    {{0x1F61B, 0, 0, 0, 0, 0, 0, 0}, "stuck_out_tongue"},
    {{0x1F61C, 0, 0, 0, 0, 0, 0, 0}, "stuck_out_tongue_winking_eye"},
    {{0x1F61D, 0, 0, 0, 0, 0, 0, 0}, "stuck_out_tongue_closed_eyes"},
    {{0x1F61E, 0, 0, 0, 0, 0, 0, 0}, "disappointed"},
    {{0x1F61F, 0, 0, 0, 0, 0, 0, 0}, "worried"},
    {{0x1F620, 0, 0, 0, 0, 0, 0, 0}, "angry"},
    {{0x1F621, 0, 0, 0, 0, 0, 0, 0}, "rage"},
    {{0x1F622, 0, 0, 0, 0, 0, 0, 0}, "cry"},
    {{0x1F623, 0, 0, 0, 0, 0, 0, 0}, "persevere"},
    {{0x1F624, 0, 0, 0, 0, 0, 0, 0}, "triumph"},
    {{0x1F625, 0, 0, 0, 0, 0, 0, 0}, "disappointed_relieved"},
    {{0x1F626, 0, 0, 0, 0, 0, 0, 0}, "frowning"},
    {{0x1F627, 0, 0, 0, 0, 0, 0, 0}, "anguished"},
    {{0x1F628, 0, 0, 0, 0, 0, 0, 0}, "fearful"},
    {{0x1F629, 0, 0, 0, 0, 0, 0, 0}, "weary"},
    {{0x1F62A, 0, 0, 0, 0, 0, 0, 0}, "sleepy"},
    {{0x1F62B, 0, 0, 0, 0, 0, 0, 0}, "tired_face"},
    {{0x1F62C, 0, 0, 0, 0, 0, 0, 0}, "grimacing"},
    {{0x1F62D, 0, 0, 0, 0, 0, 0, 0}, "sob"},
    {{0x1F62E, 0, 0, 0, 0, 0, 0, 0}, "open_mouth"},
    {{0x1F62F, 0, 0, 0, 0, 0, 0, 0}, "hushed"},
    {{0x1F630, 0, 0, 0, 0, 0, 0, 0}, "cold_sweat"},
    {{0x1F631, 0, 0, 0, 0, 0, 0, 0}, "scream"},
    {{0x1F632, 0, 0, 0, 0, 0, 0, 0}, "astonished"},
    {{0x1F633, 0, 0, 0, 0, 0, 0, 0}, "flushed"},
    {{0x1F634, 0, 0, 0, 0, 0, 0, 0}, "sleeping"},
    {{0x1F635, 0, 0, 0, 0, 0, 0, 0}, "dizzy_face"},
    {{0x1F636, 0, 0, 0, 0, 0, 0, 0}, "no_mouth"},
    {{0x1F637, 0, 0, 0, 0, 0, 0, 0}, "mask"},
    {{0x1F638, 0, 0, 0, 0, 0, 0, 0}, "smile_cat"},
    {{0x1F639, 0, 0, 0, 0, 0, 0, 0}, "joy_cat"},
    {{0x1F63A, 0, 0, 0, 0, 0, 0, 0}, "smiley_cat"},
    {{0x1F63B, 0, 0, 0, 0, 0, 0, 0}, "heart_eyes_cat"},
    {{0x1F63C, 0, 0, 0, 0, 0, 0, 0}, "smirk_cat"},
    {{0x1F63D, 0, 0, 0, 0, 0, 0, 0}, "kissing_cat"},
    {{0x1F63E, 0, 0, 0, 0, 0, 0, 0}, "pouting_cat"},
    {{0x1F63F, 0, 0, 0, 0, 0, 0, 0}, "crying_cat_face"},
    {{0x1F640, 0, 0, 0, 0, 0, 0, 0}, "scream_cat"},
    {{0x1F641, 0, 0, 0, 0, 0, 0, 0}, "slightly_frowning_face"},
    {{0x1F642, 0, 0, 0, 0, 0, 0, 0}, "slightly_smiling_face"},
    {{0x1F643, 0, 0, 0, 0, 0, 0, 0}, "upside_down_face"},
    {{0x1F644, 0, 0, 0, 0, 0, 0, 0}, "roll_eyes"},
    {{0x1F645, 0, 0, 0, 0, 0, 0, 0}, "no_good"},
    {{0x1F646, 0, 0, 0, 0, 0, 0, 0}, "ok_woman"},
    {{0x1F647, 0, 0, 0, 0, 0, 0, 0}, "bow"},
    {{0x1F648, 0, 0, 0, 0, 0, 0, 0}, "see_no_evil"},
    {{0x1F649, 0, 0, 0, 0, 0, 0, 0}, "hear_no_evil"},
    {{0x1F64A, 0, 0, 0, 0, 0, 0, 0}, "speak_no_evil"},
    {{0x1F64B, 0, 0, 0, 0, 0, 0, 0}, "raising_hand"},
    {{0x1F64C, 0, 0, 0, 0, 0, 0, 0}, "raised_hands"},
    {{0x1F64D, 0, 0, 0, 0, 0, 0, 0}, "person_frowning"},
    {{0x1F64E, 0, 0, 0, 0, 0, 0, 0}, "person_with_pouting_face"},
    {{0x1F64F, 0, 0, 0, 0, 0, 0, 0}, "pray"},
    {{0x1F300, 0, 0, 0, 0, 0, 0, 0}, "cyclone"},
    {{0x1F308, 0, 0, 0, 0, 0, 0, 0}, "rainbow"},
    {{0x1F319, 0, 0, 0, 0, 0, 0, 0}, "crescent_moon"},
    {{0x1F31F, 0, 0, 0, 0, 0, 0, 0}, "star2"},
    {{0x1F320, 0, 0, 0, 0, 0, 0, 0}, "stars"},
    {{0x1F327, 0, 0, 0, 0, 0, 0, 0}, "cloud_with_rain"},
    {{0x1F330, 0, 0, 0, 0, 0, 0, 0}, "chestnut"},
    {{0x1F331, 0, 0, 0, 0, 0, 0, 0}, "seedling"},
    {{0x1F334, 0, 0, 0, 0, 0, 0, 0}, "palm_tree"},
    {{0x1F335, 0, 0, 0, 0, 0, 0, 0}, "cactus"},
    {{0x1F337, 0, 0, 0, 0, 0, 0, 0}, "tulip"},
    {{0x1F338, 0, 0, 0, 0, 0, 0, 0}, "cherry_blossom"},
    {{0x1F339, 0, 0, 0, 0, 0, 0, 0}, "rose"},
    {{0x1F33B, 0, 0, 0, 0, 0, 0, 0}, "sunflower"},
    {{0x1F33F, 0, 0, 0, 0, 0, 0, 0}, "herb"},
    {{0x1F340, 0, 0, 0, 0, 0, 0, 0}, "four_leaf_clover"},
    {{0x1F341, 0, 0, 0, 0, 0, 0, 0}, "maple_leaf"},
    {{0x1F344, 0, 0, 0, 0, 0, 0, 0}, "mushroom"},
    {{0x1F345, 0, 0, 0, 0, 0, 0, 0}, "tomato"},
    {{0x1F347, 0, 0, 0, 0, 0, 0, 0}, "grapes"},
    {{0x1F349, 0, 0, 0, 0, 0, 0, 0}, "watermelon"},
    {{0x1F34A, 0, 0, 0, 0, 0, 0, 0}, "tangerine"},
    {{0x1F34B, 0, 0, 0, 0, 0, 0, 0}, "lemon"},
    {{0x1F34C, 0, 0, 0, 0, 0, 0, 0}, "banana"},
    {{0x1F34E, 0, 0, 0, 0, 0, 0, 0}, "apple"},
    {{0x1F351, 0, 0, 0, 0, 0, 0, 0}, "peach"},
    {{0x1F352, 0, 0, 0, 0, 0, 0, 0}, "cherries"},
    {{0x1F353, 0, 0, 0, 0, 0, 0, 0}, "strawberry"},
    {{0x1F354, 0, 0, 0, 0, 0, 0, 0}, "hamburger"},
    {{0x1F355, 0, 0, 0, 0, 0, 0, 0}, "pizza"},
    {{0x1F35C, 0, 0, 0, 0, 0, 0, 0}, "ramen"},
    {{0x1F363, 0, 0, 0, 0, 0, 0, 0}, "sushi"},
    {{0x1F366, 0, 0, 0, 0, 0, 0, 0}, "icecream"},
    {{0x1F369, 0, 0, 0, 0, 0, 0, 0}, "doughnut"},
    {{0x1F36A, 0, 0, 0, 0, 0, 0, 0}, "cookie"},
    {{0x1F382, 0, 0, 0, 0, 0, 0, 0}, "birthday"},
    {{0x1F383, 0, 0, 0, 0, 0, 0, 0}, "jack_o_lantern"},
    {{0x1F384, 0, 0, 0, 0, 0, 0, 0}, "christmas_tree"},
    {{0x1F385, 0, 0, 0, 0, 0, 0, 0}, "santa"},
    {{0x1F388, 0, 0, 0, 0, 0, 0, 0}, "balloon"},
    {{0x1F389, 0, 0, 0, 0, 0, 0, 0}, "tada"},
    {{0x1F38A, 0, 0, 0, 0, 0, 0, 0}, "confetti_ball"},
    {{0x1F393, 0, 0, 0, 0, 0, 0, 0}, "mortar_board"},
    {{0x1F3A4, 0, 0, 0, 0, 0, 0, 0}, "microphone"},
    {{0x1F3A7, 0, 0, 0, 0, 0, 0, 0}, "headphones"},
    {{0x1F3A8, 0, 0, 0, 0, 0, 0, 0}, "art"},
    {{0x1F3AC, 0, 0, 0, 0, 0, 0, 0}, "clapper"},
    {{0x1F3AE, 0, 0, 0, 0, 0, 0, 0}, "video_game"},
    {{0x1F3AF, 0, 0, 0, 0, 0, 0, 0}, "dart"},
    {{0x1F3B2, 0, 0, 0, 0, 0, 0, 0}, "game_die"},
    {{0x1F3B5, 0, 0, 0, 0, 0, 0, 0}, "musical_note"},
    {{0x1F3B6, 0, 0, 0, 0, 0, 0, 0}, "notes"},
    {{0x1F3B8, 0, 0, 0, 0, 0, 0, 0}, "guitar"},
    {{0x1F3BA, 0, 0, 0, 0, 0, 0, 0}, "trumpet"},
    {{0x1F3BB, 0, 0, 0, 0, 0, 0, 0}, "violin"},
    {{0x1F3BE, 0, 0, 0, 0, 0, 0, 0}, "tennis"},
    {{0x1F3C0, 0, 0, 0, 0, 0, 0, 0}, "basketball"},
    {{0x1F3C1, 0, 0, 0, 0, 0, 0, 0}, "checkered_flag"},
    {{0x1F3C6, 0, 0, 0, 0, 0, 0, 0}, "trophy"},
    {{0x1F3C8, 0, 0, 0, 0, 0, 0, 0}, "football"},
    {{0x1F3E0, 0, 0, 0, 0, 0, 0, 0}, "house"},
    {{0x1F3E5, 0, 0, 0, 0, 0, 0, 0}, "hospital"},
    {{0x1F3EB, 0, 0, 0, 0, 0, 0, 0}, "school"},
    {{0x1F3ED, 0, 0, 0, 0, 0, 0, 0}, "factory"},
    {{0x1F3F3, 0xFE0F, 0x200D, 0x1F308, 0, 0, 0, 0}, "rainbow_flag"},
    {{0x1F400, 0, 0, 0, 0, 0, 0, 0}, "rat"},
    {{0x1F401, 0, 0, 0, 0, 0, 0, 0}, "mouse2"},
    {{0x1F405, 0, 0, 0, 0, 0, 0, 0}, "tiger2"},
    {{0x1F407, 0, 0, 0, 0, 0, 0, 0}, "rabbit2"},
    {{0x1F408, 0, 0, 0, 0, 0, 0, 0}, "cat2"},
    {{0x1F40A, 0, 0, 0, 0, 0, 0, 0}, "crocodile"},
    {{0x1F40C, 0, 0, 0, 0, 0, 0, 0}, "snail"},
    {{0x1F40D, 0, 0, 0, 0, 0, 0, 0}, "snake"},
    {{0x1F40E, 0, 0, 0, 0, 0, 0, 0}, "racehorse"},
    {{0x1F411, 0, 0, 0, 0, 0, 0, 0}, "sheep"},
    {{0x1F412, 0, 0, 0, 0, 0, 0, 0}, "monkey"},
    {{0x1F414, 0, 0, 0, 0, 0, 0, 0}, "chicken"},
    {{0x1F418, 0, 0, 0, 0, 0, 0, 0}, "elephant"},
    {{0x1F419, 0, 0, 0, 0, 0, 0, 0}, "octopus"},
    {{0x1F41B, 0, 0, 0, 0, 0, 0, 0}, "bug"},
    {{0x1F41D, 0, 0, 0, 0, 0, 0, 0}, "bee"},
    {{0x1F41F, 0, 0, 0, 0, 0, 0, 0}, "fish"},
    {{0x1F420, 0, 0, 0, 0, 0, 0, 0}, "tropical_fish"},
    {{0x1F422, 0, 0, 0, 0, 0, 0, 0}, "turtle"},
    {{0x1F424, 0, 0, 0, 0, 0, 0, 0}, "baby_chick"},
    {{0x1F426, 0, 0, 0, 0, 0, 0, 0}, "bird"},
    {{0x1F427, 0, 0, 0, 0, 0, 0, 0}, "penguin"},
    {{0x1F428, 0, 0, 0, 0, 0, 0, 0}, "koala"},
    {{0x1F42B, 0, 0, 0, 0, 0, 0, 0}, "camel"},
    {{0x1F42C, 0, 0, 0, 0, 0, 0, 0}, "dolphin"},
    {{0x1F42D, 0, 0, 0, 0, 0, 0, 0}, "mouse"},
    {{0x1F42E, 0, 0, 0, 0, 0, 0, 0}, "cow"},
    {{0x1F42F, 0, 0, 0, 0, 0, 0, 0}, "tiger"},
    {{0x1F430, 0, 0, 0, 0, 0, 0, 0}, "rabbit"},
    {{0x1F431, 0, 0, 0, 0, 0, 0, 0}, "cat"},
    {{0x1F433, 0, 0, 0, 0, 0, 0, 0}, "whale"},
    {{0x1F434, 0, 0, 0, 0, 0, 0, 0}, "horse"},
    {{0x1F435, 0, 0, 0, 0, 0, 0, 0}, "monkey_face"},
    {{0x1F436, 0, 0, 0, 0, 0, 0, 0}, "dog"},
    {{0x1F437, 0, 0, 0, 0, 0, 0, 0}, "pig"},
    {{0x1F438, 0, 0, 0, 0, 0, 0, 0}, "frog"},
    {{0x1F439, 0, 0, 0, 0, 0, 0, 0}, "hamster"},
    {{0x1F43B, 0, 0, 0, 0, 0, 0, 0}, "bear"},
    {{0x1F43C, 0, 0, 0, 0, 0, 0, 0}, "panda_face"},
    {{0x1F440, 0, 0, 0, 0, 0, 0, 0}, "eyes"},
    {{0x1F442, 0, 0, 0, 0, 0, 0, 0}, "ear"},
    {{0x1F443, 0, 0, 0, 0, 0, 0, 0}, "nose"},
    {{0x1F444, 0, 0, 0, 0, 0, 0, 0}, "lips"},
    {{0x1F445, 0, 0, 0, 0, 0, 0, 0}, "tongue"},
    {{0x1F446, 0, 0, 0, 0, 0, 0, 0}, "point_up_2"},
    {{0x1F447, 0, 0, 0, 0, 0, 0, 0}, "point_down"},
    {{0x1F448, 0, 0, 0, 0, 0, 0, 0}, "point_left"},
    {{0x1F449, 0, 0, 0, 0, 0, 0, 0}, "point_right"},
    {{0x1F44A, 0, 0, 0, 0, 0, 0, 0}, "facepunch"},
    {{0x1F44B, 0, 0, 0, 0, 0, 0, 0}, "wave"},
    {{0x1F44C, 0, 0, 0, 0, 0, 0, 0}, "ok_hand"},
    {{0x1F44D, 0, 0, 0, 0, 0, 0, 0}, "thumbsup"},
    {{0x1F44E, 0, 0, 0, 0, 0, 0, 0}, "thumbsdown"},
    {{0x1F44F, 0, 0, 0, 0, 0, 0, 0}, "clap"},
    {{0x1F450, 0, 0, 0, 0, 0, 0, 0}, "open_hands"},
    {{0x1F451, 0, 0, 0, 0, 0, 0, 0}, "crown"},
    {{0x1F452, 0, 0, 0, 0, 0, 0, 0}, "womans_hat"},
    {{0x1F455, 0, 0, 0, 0, 0, 0, 0}, "shirt"},
    {{0x1F457, 0, 0, 0, 0, 0, 0, 0}, "dress"},
    {{0x1F45F, 0, 0, 0, 0, 0, 0, 0}, "athletic_shoe"},
    {{0x1F460, 0, 0, 0, 0, 0, 0, 0}, "high_heel"},
    {{0x1F463, 0, 0, 0, 0, 0, 0, 0}, "footprints"},
    {{0x1F464, 0, 0, 0, 0, 0, 0, 0}, "bust_in_silhouette"},
    {{0x1F466, 0, 0, 0, 0, 0, 0, 0}, "boy"},
    {{0x1F467, 0, 0, 0, 0, 0, 0, 0}, "girl"},
    {{0x1F468, 0, 0, 0, 0, 0, 0, 0}, "man"},
    {{0x1F468, 0x200D, 0x2695, 0xFE0F, 0, 0, 0, 0}, "man_health_worker"},
    {{0x1F469, 0, 0, 0, 0, 0, 0, 0}, "woman"},
    {{0x1F469, 0x200D, 0x2695, 0xFE0F, 0, 0, 0, 0}, "woman_health_worker"},
    {{0x1F476, 0, 0, 0, 0, 0, 0, 0}, "baby"},
    {{0x1F47B, 0, 0, 0, 0, 0, 0, 0}, "ghost"},
    {{0x1F47D, 0, 0, 0, 0, 0, 0, 0}, "alien"},
    {{0x1F47F, 0, 0, 0, 0, 0, 0, 0}, "imp"},
    {{0x1F480, 0, 0, 0, 0, 0, 0, 0}, "skull"},
    {{0x1F484, 0, 0, 0, 0, 0, 0, 0}, "lipstick"},
    {{0x1F489, 0, 0, 0, 0, 0, 0, 0}, "syringe"},
    {{0x1F48A, 0, 0, 0, 0, 0, 0, 0}, "pill"},
    {{0x1F48B, 0, 0, 0, 0, 0, 0, 0}, "kiss"},
    {{0x1F48D, 0, 0, 0, 0, 0, 0, 0}, "ring"},
    {{0x1F48E, 0, 0, 0, 0, 0, 0, 0}, "gem"},
    {{0x1F490, 0, 0, 0, 0, 0, 0, 0}, "bouquet"},
    {{0x1F494, 0, 0, 0, 0, 0, 0, 0}, "broken_heart"},
    {{0x1F495, 0, 0, 0, 0, 0, 0, 0}, "two_hearts"},
    {{0x1F496, 0, 0, 0, 0, 0, 0, 0}, "sparkling_heart"},
    {{0x1F497, 0, 0, 0, 0, 0, 0, 0}, "heartpulse"},
    {{0x1F499, 0, 0, 0, 0, 0, 0, 0}, "blue_heart"},
    {{0x1F49A, 0, 0, 0, 0, 0, 0, 0}, "green_heart"},
    {{0x1F49B, 0, 0, 0, 0, 0, 0, 0}, "yellow_heart"},
    {{0x1F49C, 0, 0, 0, 0, 0, 0, 0}, "purple_heart"},
    {{0x1F49D, 0, 0, 0, 0, 0, 0, 0}, "gift_heart"},
    {{0x1F4A1, 0, 0, 0, 0, 0, 0, 0}, "bulb"},
    {{0x1F4A3, 0, 0, 0, 0, 0, 0, 0}, "bomb"},
    {{0x1F4A5, 0, 0, 0, 0, 0, 0, 0}, "boom"},
    {{0x1F4A6, 0, 0, 0, 0, 0, 0, 0}, "sweat_drops"},
    {{0x1F4A7, 0, 0, 0, 0, 0, 0, 0}, "droplet"},
    {{0x1F4A8, 0, 0, 0, 0, 0, 0, 0}, "dash"},
    {{0x1F4AA, 0, 0, 0, 0, 0, 0, 0}, "muscle"},
    {{0x1F4AB, 0, 0, 0, 0, 0, 0, 0}, "dizzy"},
    {{0x1F4AC, 0, 0, 0, 0, 0, 0, 0}, "speech_balloon"},
    {{0x1F4AD, 0, 0, 0, 0, 0, 0, 0}, "thought_balloon"},
    {{0x1F4AF, 0, 0, 0, 0, 0, 0, 0}, "100"},
    {{0x1F4B0, 0, 0, 0, 0, 0, 0, 0}, "moneybag"},
    {{0x1F4B8, 0, 0, 0, 0, 0, 0, 0}, "money_with_wings"},
    {{0x1F4BB, 0, 0, 0, 0, 0, 0, 0}, "computer"},
    {{0x1F4BE, 0, 0, 0, 0, 0, 0, 0}, "floppy_disk"},
    {{0x1F4C5, 0, 0, 0, 0, 0, 0, 0}, "date"},
    {{0x1F4C8, 0, 0, 0, 0, 0, 0, 0}, "chart_with_upwards_trend"},
    {{0x1F4C9, 0, 0, 0, 0, 0, 0, 0}, "chart_with_downwards_trend"},
    {{0x1F4DA, 0, 0, 0, 0, 0, 0, 0}, "books"},
    {{0x1F4DD, 0, 0, 0, 0, 0, 0, 0}, "memo"},
    {{0x1F4E2, 0, 0, 0, 0, 0, 0, 0}, "loudspeaker"},
    {{0x1F4F1, 0, 0, 0, 0, 0, 0, 0}, "iphone"},
    {{0x1F4F7, 0, 0, 0, 0, 0, 0, 0}, "camera"},
    {{0x1F4FA, 0, 0, 0, 0, 0, 0, 0}, "tv"},
    {{0x1F500, 0, 0, 0, 0, 0, 0, 0}, "twisted_rightwards_arrows"},
    {{0x1F50A, 0, 0, 0, 0, 0, 0, 0}, "loud_sound"},
    {{0x1F50B, 0, 0, 0, 0, 0, 0, 0}, "battery"},
    {{0x1F50D, 0, 0, 0, 0, 0, 0, 0}, "mag"},
    {{0x1F511, 0, 0, 0, 0, 0, 0, 0}, "key"},
    {{0x1F512, 0, 0, 0, 0, 0, 0, 0}, "lock"},
    {{0x1F514, 0, 0, 0, 0, 0, 0, 0}, "bell"},
    {{0x1F525, 0, 0, 0, 0, 0, 0, 0}, "fire"},
    {{0x1F527, 0, 0, 0, 0, 0, 0, 0}, "wrench"},
    {{0x1F528, 0, 0, 0, 0, 0, 0, 0}, "hammer"},
    {{0x1F52B, 0, 0, 0, 0, 0, 0, 0}, "gun"},
    {{0x1F52E, 0, 0, 0, 0, 0, 0, 0}, "crystal_ball"},
    {{0x1F5FA, 0, 0, 0, 0, 0, 0, 0}, "world_map"},
    {{0x1F5FF, 0, 0, 0, 0, 0, 0, 0}, "moyai"},
    {{0x1F680, 0, 0, 0, 0, 0, 0, 0}, "rocket"},
    {{0x1F681, 0, 0, 0, 0, 0, 0, 0}, "helicopter"},
    {{0x1F684, 0, 0, 0, 0, 0, 0, 0}, "bullettrain_side"},
    {{0x1F68C, 0, 0, 0, 0, 0, 0, 0}, "bus"},
    {{0x1F691, 0, 0, 0, 0, 0, 0, 0}, "ambulance"},
    {{0x1F692, 0, 0, 0, 0, 0, 0, 0}, "fire_engine"},
    {{0x1F693, 0, 0, 0, 0, 0, 0, 0}, "police_car"},
    {{0x1F695, 0, 0, 0, 0, 0, 0, 0}, "taxi"},
    {{0x1F697, 0, 0, 0, 0, 0, 0, 0}, "red_car"},
    {{0x1F699, 0, 0, 0, 0, 0, 0, 0}, "blue_car"},
    {{0x1F6A2, 0, 0, 0, 0, 0, 0, 0}, "ship"},
    {{0x1F6A7, 0, 0, 0, 0, 0, 0, 0}, "construction"},
    {{0x1F6A8, 0, 0, 0, 0, 0, 0, 0}, "rotating_light"},
    {{0x1F6AA, 0, 0, 0, 0, 0, 0, 0}, "door"},
    {{0x1F6AB, 0, 0, 0, 0, 0, 0, 0}, "no_entry_sign"},
    {{0x1F6AC, 0, 0, 0, 0, 0, 0, 0}, "smoking"},
    {{0x1F6B2, 0, 0, 0, 0, 0, 0, 0}, "bike"},
    {{0x1F6B6, 0, 0, 0, 0, 0, 0, 0}, "walking"},
    {{0x1F6BD, 0, 0, 0, 0, 0, 0, 0}, "toilet"},
    {{0x1F6BF, 0, 0, 0, 0, 0, 0, 0}, "shower"},
    {{0x1F6C0, 0, 0, 0, 0, 0, 0, 0}, "bath"},
    {{0x1F6C1, 0, 0, 0, 0, 0, 0, 0}, "bathtub"},
    {{0x1F910, 0, 0, 0, 0, 0, 0, 0}, "zipper_mouth_face"},
    {{0x1F911, 0, 0, 0, 0, 0, 0, 0}, "money_mouth_face"},
    {{0x1F912, 0, 0, 0, 0, 0, 0, 0}, "face_with_thermometer"},
    {{0x1F913, 0, 0, 0, 0, 0, 0, 0}, "nerd_face"},
    {{0x1F914, 0, 0, 0, 0, 0, 0, 0}, "thinking"},
    {{0x1F915, 0, 0, 0, 0, 0, 0, 0}, "face_with_head_bandage"},
    {{0x1F916, 0, 0, 0, 0, 0, 0, 0}, "robot"},
    {{0x1F917, 0, 0, 0, 0, 0, 0, 0}, "hugging_face"},
    {{0x1F918, 0, 0, 0, 0, 0, 0, 0}, "metal"},
    {{0x1F920, 0, 0, 0, 0, 0, 0, 0}, "cowboy_hat_face"},
    {{0x1F921, 0, 0, 0, 0, 0, 0, 0}, "clown_face"},
    {{0x1F922, 0, 0, 0, 0, 0, 0, 0}, "nauseated_face"},
    {{0x1F923, 0, 0, 0, 0, 0, 0, 0}, "rofl"},
    {{0x1F924, 0, 0, 0, 0, 0, 0, 0}, "drooling_face"},
    {{0x1F925, 0, 0, 0, 0, 0, 0, 0}, "lying_face"},
    {{0x1F926, 0, 0, 0, 0, 0, 0, 0}, "facepalm"},
    {{0x1F926, 0x200D, 0x2640, 0xFE0F, 0, 0, 0, 0}, "woman_facepalming"},
    {{0x1F926, 0x200D, 0x2642, 0xFE0F, 0, 0, 0, 0}, "man_facepalming"},
    {{0x1F927, 0, 0, 0, 0, 0, 0, 0}, "sneezing_face"},
    {{0x1F928, 0, 0, 0, 0, 0, 0, 0}, "raised_eyebrow"},
    {{0x1F929, 0, 0, 0, 0, 0, 0, 0}, "star_struck"},
    {{0x1F92A, 0, 0, 0, 0, 0, 0, 0}, "zany_face"},
    {{0x1F92B, 0, 0, 0, 0, 0, 0, 0}, "shushing_face"},
    {{0x1F92C, 0, 0, 0, 0, 0, 0, 0}, "face_with_symbols_on_mouth"},
    {{0x1F92D, 0, 0, 0, 0, 0, 0, 0}, "hand_over_mouth"},
    {{0x1F92E, 0, 0, 0, 0, 0, 0, 0}, "vomiting_face"},
    {{0x1F92F, 0, 0, 0, 0, 0, 0, 0}, "exploding_head"},
    {{0x1F930, 0, 0, 0, 0, 0, 0, 0}, "pregnant_woman"},
    {{0x1F933, 0, 0, 0, 0, 0, 0, 0}, "selfie"},
    {{0x1F937, 0, 0, 0, 0, 0, 0, 0}, "shrug"},
    {{0x1F937, 0x200D, 0x2640, 0xFE0F, 0, 0, 0, 0}, "woman_shrugging"},
    {{0x1F937, 0x200D, 0x2642, 0xFE0F, 0, 0, 0, 0}, "man_shrugging"},
    {{0x1F942, 0, 0, 0, 0, 0, 0, 0}, "clinking_glasses"},
    {{0x1F970, 0, 0, 0, 0, 0, 0, 0}, "smiling_face_with_hearts"},
    {{0x1F971, 0, 0, 0, 0, 0, 0, 0}, "yawning_face"},
    {{0x1F972, 0, 0, 0, 0, 0, 0, 0}, "smiling_face_with_tear"},
    {{0x1F973, 0, 0, 0, 0, 0, 0, 0}, "partying_face"},
    {{0x1F974, 0, 0, 0, 0, 0, 0, 0}, "woozy_face"},
    {{0x1F975, 0, 0, 0, 0, 0, 0, 0}, "hot_face"},
    {{0x1F976, 0, 0, 0, 0, 0, 0, 0}, "cold_face"},
    {{0x1F978, 0, 0, 0, 0, 0, 0, 0}, "disguised_face"},
    {{0x1F97A, 0, 0, 0, 0, 0, 0, 0}, "pleading_face"},
    {{0x1F980, 0, 0, 0, 0, 0, 0, 0}, "crab"},
    {{0x1F981, 0, 0, 0, 0, 0, 0, 0}, "lion"},
    {{0x1F984, 0, 0, 0, 0, 0, 0, 0}, "unicorn"},
    {{0x1F988, 0, 0, 0, 0, 0, 0, 0}, "shark"},
    {{0x1F98B, 0, 0, 0, 0, 0, 0, 0}, "butterfly"},
    {{0x1F98D, 0, 0, 0, 0, 0, 0, 0}, "gorilla"},
    {{0x1F9A0, 0, 0, 0, 0, 0, 0, 0}, "microbe"},
    {{0x1F9D0, 0, 0, 0, 0, 0, 0, 0}, "face_with_monocle"},
    {{0x1F9E0, 0, 0, 0, 0, 0, 0, 0}, "brain"},
    {{0x1FA79, 0, 0, 0, 0, 0, 0, 0}, "adhesive_bandage"},
    {{0x1FA84, 0, 0, 0, 0, 0, 0, 0}, "magic_wand"},
    {{0x1FAE0, 0, 0, 0, 0, 0, 0, 0}, "melting_face"},
    {{0x1FAE1, 0, 0, 0, 0, 0, 0, 0}, "saluting_face"},
    {{0x1FAE3, 0, 0, 0, 0, 0, 0, 0}, "face_with_peeking_eye"},
    {{0x1FAE5, 0, 0, 0, 0, 0, 0, 0}, "dotted_line_face"},
    {{0x2600, 0, 0, 0, 0, 0, 0, 0}, "sunny"},
    {{0x2601, 0, 0, 0, 0, 0, 0, 0}, "cloud"},
    {{0x2602, 0, 0, 0, 0, 0, 0, 0}, "open_umbrella"},
    {{0x2603, 0, 0, 0, 0, 0, 0, 0}, "snowman_with_snow"},
    {{0x2614, 0, 0, 0, 0, 0, 0, 0}, "umbrella"},
    {{0x2615, 0, 0, 0, 0, 0, 0, 0}, "coffee"},
    {{0x2618, 0, 0, 0, 0, 0, 0, 0}, "shamrock"},
    {{0x261D, 0, 0, 0, 0, 0, 0, 0}, "point_up"},
    {{0x2620, 0, 0, 0, 0, 0, 0, 0}, "skull_and_crossbones"},
    {{0x2622, 0, 0, 0, 0, 0, 0, 0}, "radioactive"},
    {{0x2623, 0, 0, 0, 0, 0, 0, 0}, "biohazard"},
    {{0x262F, 0, 0, 0, 0, 0, 0, 0}, "yin_yang"},
    {{0x2639, 0, 0, 0, 0, 0, 0, 0}, "frowning_face"},
    {{0x263A, 0, 0, 0, 0, 0, 0, 0}, "relaxed"},
    {{0x2640, 0, 0, 0, 0, 0, 0, 0}, "female_sign"},
    {{0x2642, 0, 0, 0, 0, 0, 0, 0}, "male_sign"},
    {{0x2660, 0, 0, 0, 0, 0, 0, 0}, "spades"},
    {{0x2663, 0, 0, 0, 0, 0, 0, 0}, "clubs"},
    {{0x2665, 0, 0, 0, 0, 0, 0, 0}, "hearts"},
    {{0x2666, 0, 0, 0, 0, 0, 0, 0}, "diamonds"},
    {{0x2668, 0, 0, 0, 0, 0, 0, 0}, "hotsprings"},
    {{0x267F, 0, 0, 0, 0, 0, 0, 0}, "wheelchair"},
    {{0x2692, 0, 0, 0, 0, 0, 0, 0}, "hammer_and_pick"},
    {{0x2693, 0, 0, 0, 0, 0, 0, 0}, "anchor"},
    {{0x2694, 0, 0, 0, 0, 0, 0, 0}, "crossed_swords"},
    {{0x2695, 0, 0, 0, 0, 0, 0, 0}, "medical_symbol"},
    {{0x2696, 0, 0, 0, 0, 0, 0, 0}, "balance_scale"},
    {{0x2699, 0, 0, 0, 0, 0, 0, 0}, "gear"},
    {{0x26A0, 0, 0, 0, 0, 0, 0, 0}, "warning"},
    {{0x26A1, 0, 0, 0, 0, 0, 0, 0}, "zap"},
    {{0x26AA, 0, 0, 0, 0, 0, 0, 0}, "white_circle"},
    {{0x26AB, 0, 0, 0, 0, 0, 0, 0}, "black_circle"},
    {{0x26BD, 0, 0, 0, 0, 0, 0, 0}, "soccer"},
    {{0x26BE, 0, 0, 0, 0, 0, 0, 0}, "baseball"},
    {{0x26C4, 0, 0, 0, 0, 0, 0, 0}, "snowman"},
    {{0x26C5, 0, 0, 0, 0, 0, 0, 0}, "partly_sunny"},
    {{0x26D4, 0, 0, 0, 0, 0, 0, 0}, "no_entry"},
    {{0x26EA, 0, 0, 0, 0, 0, 0, 0}, "church"},
    {{0x26F2, 0, 0, 0, 0, 0, 0, 0}, "fountain"},
    {{0x26F3, 0, 0, 0, 0, 0, 0, 0}, "golf"},
    {{0x26F5, 0, 0, 0, 0, 0, 0, 0}, "boat"},
    {{0x26FA, 0, 0, 0, 0, 0, 0, 0}, "tent"},
    {{0x26FD, 0, 0, 0, 0, 0, 0, 0}, "fuelpump"},
    {{0x2702, 0, 0, 0, 0, 0, 0, 0}, "scissors"},
    {{0x2705, 0, 0, 0, 0, 0, 0, 0}, "white_check_mark"},
    {{0x2708, 0, 0, 0, 0, 0, 0, 0}, "airplane"},
    {{0x2709, 0, 0, 0, 0, 0, 0, 0}, "envelope"},
    {{0x270A, 0, 0, 0, 0, 0, 0, 0}, "fist"},
    {{0x270B, 0, 0, 0, 0, 0, 0, 0}, "hand"},
    {{0x270C, 0, 0, 0, 0, 0, 0, 0}, "v"},
    {{0x270F, 0, 0, 0, 0, 0, 0, 0}, "pencil2"},
    {{0x2712, 0, 0, 0, 0, 0, 0, 0}, "black_nib"},
    {{0x2714, 0, 0, 0, 0, 0, 0, 0}, "heavy_check_mark"},
    {{0x2716, 0, 0, 0, 0, 0, 0, 0}, "heavy_multiplication_x"},
    {{0x271D, 0, 0, 0, 0, 0, 0, 0}, "latin_cross"},
    {{0x2721, 0, 0, 0, 0, 0, 0, 0}, "star_of_david"},
    {{0x2728, 0, 0, 0, 0, 0, 0, 0}, "sparkles"},
    {{0x2733, 0, 0, 0, 0, 0, 0, 0}, "eight_spoked_asterisk"},
    {{0x2734, 0, 0, 0, 0, 0, 0, 0}, "eight_pointed_black_star"},
    {{0x2744, 0, 0, 0, 0, 0, 0, 0}, "snowflake"},
    {{0x2747, 0, 0, 0, 0, 0, 0, 0}, "sparkle"},
    {{0x274C, 0, 0, 0, 0, 0, 0, 0}, "x"},
    {{0x274E, 0, 0, 0, 0, 0, 0, 0}, "negative_squared_cross_mark"},
    {{0x2753, 0, 0, 0, 0, 0, 0, 0}, "question"},
    {{0x2754, 0, 0, 0, 0, 0, 0, 0}, "grey_question"},
    {{0x2755, 0, 0, 0, 0, 0, 0, 0}, "grey_exclamation"},
    {{0x2757, 0, 0, 0, 0, 0, 0, 0}, "exclamation"},
    {{0x2763, 0, 0, 0, 0, 0, 0, 0}, "heavy_heart_exclamation"},
    {{0x2764, 0, 0, 0, 0, 0, 0, 0}, "heart"},
    {{0x2764, 0xFE0F, 0x200D, 0x1F525, 0, 0, 0, 0}, "heart_on_fire"},
    {{0x2795, 0, 0, 0, 0, 0, 0, 0}, "heavy_plus_sign"},
    {{0x2796, 0, 0, 0, 0, 0, 0, 0}, "heavy_minus_sign"},
    {{0x2797, 0, 0, 0, 0, 0, 0, 0}, "heavy_division_sign"},
    {{0x27A1, 0, 0, 0, 0, 0, 0, 0}, "arrow_right"},
    {{0x27B0, 0, 0, 0, 0, 0, 0, 0}, "curly_loop"},
    {{0x27BF, 0, 0, 0, 0, 0, 0, 0}, "loop"},
    {{0x1F1E9, 0x1F1EA, 0, 0, 0, 0, 0, 0}, "de"},
    {{0x1F1EB, 0x1F1F7, 0, 0, 0, 0, 0, 0}, "fr"},
    {{0x1F1EC, 0x1F1E7, 0, 0, 0, 0, 0, 0}, "gb"},
    {{0x1F1EF, 0x1F1F5, 0, 0, 0, 0, 0, 0}, "jp"},
    {{0x1F1FA, 0x1F1F8, 0, 0, 0, 0, 0, 0}, "us"},
};

const std::size_t k_emoji_name_row_count = sizeof(k_emoji_name_rows) / sizeof(k_emoji_name_rows[0]);

}  // namespace demoji::emoji
